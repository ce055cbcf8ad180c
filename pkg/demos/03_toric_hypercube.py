"""
(CP^1)^m from the hypercube
===========================

The vertices of the m-cube are exponent vectors.  Pairs of vertices with the
same sum give quadratic relations, and these contain the Segre minors.
"""

from segretoric import (
    VertexExponentMap,
    family_state,
    hypercube_atlas,
    ideal_equivalence_report,
    single_swap_minors,
    toric_ideal_quadrics,
)
from segretoric.segre import max_residual

###############################################################################
# Charts: each one inverts a different subset of the affine coordinates.
atlas = hypercube_atlas(3)
for i in range(1, len(atlas.charts) + 1):
    print(i, atlas.describe(i))

###############################################################################
# Vertex to amplitude index.
vmap = VertexExponentMap(3)
for vertex, index in vmap.entries():
    print(vertex, "->", index)

###############################################################################
# Quadric counts.  From four qubits on, the toric list has relations that
# swap two positions at once, such as a_0000 a_1111 - a_0011 a_1100.
for m in range(2, 6):
    print(m, len(single_swap_minors(m)), len(toric_ideal_quadrics(m)))

extra = {b.ranks() for b in toric_ideal_quadrics(4)} - {b.ranks() for b in single_swap_minors(4)}
print(sorted(extra)[:3])

###############################################################################
# Sampled states: quadrics vanish exactly where the minors do.
rep = ideal_equivalence_report(4, trials=50, seed=0)
print("verdict", rep.verdict, "dense max quadric", round(rep.dense_max_quadric, 4))
print("GHZ(4):", max_residual(toric_ideal_quadrics(4), family_state("ghz", 4))[0])
