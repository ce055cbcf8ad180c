"""
Partitioned Segre embeddings
============================

Embedding four qubits pairwise into two copies of P^3 and then joining the
blocks gives the same point as the one-shot embedding.  We check this for
every bracketing of four leaves.
"""

import numpy as np

from segretoric import binary_trees, compose_partition, parse_tree, segre_embed
from segretoric.partition import format_tree
from segretoric.state import random_factors

rng = np.random.default_rng(1)
factors = random_factors(4, rng)
vectors = [f.as_array() for f in factors]
direct = segre_embed(factors, normalize=False)

###############################################################################
# The bracketing ((1,2),(3,4)): two 2x2 embeddings followed by a 4x4 one.
tree = parse_tree("((1,2),(3,4))")
composed = compose_partition(tree, vectors)
print("max deviation:", np.abs(composed.amplitudes - direct.amplitudes).max())

###############################################################################
# All five bracketings agree.
for tree in binary_trees(range(4)):
    dev = np.abs(compose_partition(tree, vectors).amplitudes - direct.amplitudes).max()
    print(f"{format_tree(tree):>16}  {dev:.1e}")
