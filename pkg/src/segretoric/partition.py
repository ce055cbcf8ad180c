"""Block Segre embeddings composed along binary partition trees.

A tree such as ``((1,2),(3,4))`` first embeds qubits 1,2 and 3,4 pairwise
into ``P^3`` and then joins the two blocks with a ``4 x 4`` Segre map.
Leaf labels are 1-based positions in the list of leaf vectors; the left
block is always the more significant one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

import numpy as np

from .state import MultiQubitState


@dataclass(frozen=True)
class Leaf:
    """A block of one or more subsystems.

    ``label`` picks the leaf vector (0-based); ``None`` means "next in
    traversal order".
    """

    dims: tuple[int, ...] = (2,)
    label: int | None = None

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if not dims or any(d < 2 for d in dims):
            raise ValueError(f"leaf dimensions must be >= 2, got {dims}")
        object.__setattr__(self, "dims", dims)

    @property
    def dim(self) -> int:
        return math.prod(self.dims)


@dataclass(frozen=True)
class Join:
    left: "PartitionNode"
    right: "PartitionNode"

    @property
    def dim(self) -> int:
        return self.left.dim * self.right.dim


PartitionNode = Union[Leaf, Join]


def leaves(tree: PartitionNode) -> list[Leaf]:
    if isinstance(tree, Leaf):
        return [tree]
    return leaves(tree.left) + leaves(tree.right)


def block_segre(left, right) -> np.ndarray:
    """``out[i * d2 + j] = left[i] * right[j]``."""
    left = np.asarray(left, dtype=np.complex128).reshape(-1)
    right = np.asarray(right, dtype=np.complex128).reshape(-1)
    if not left.any() or not right.any():
        raise ValueError("block Segre map needs nonzero input vectors")
    return np.outer(left, right).reshape(-1)


def compose_vectors(tree: PartitionNode, leaf_vectors: Sequence) -> np.ndarray:
    """Apply :func:`block_segre` bottom-up along ``tree``."""
    lv = leaves(tree)
    if len(lv) != len(leaf_vectors):
        raise ValueError(f"tree has {len(lv)} leaves but {len(leaf_vectors)} vectors were given")
    labels = [leaf.label for leaf in lv]
    if any(x is not None for x in labels):
        if None in labels or sorted(labels) != list(range(len(lv))):
            raise ValueError(f"leaf labels must be a permutation of 1..{len(lv)}")
    vectors = [np.asarray(v, dtype=np.complex128).reshape(-1) for v in leaf_vectors]
    order = iter(range(len(lv)))

    def walk(node):
        if isinstance(node, Join):
            return block_segre(walk(node.left), walk(node.right))
        i = next(order) if node.label is None else node.label
        v = vectors[i]
        if v.shape[0] != node.dim:
            raise ValueError(
                f"leaf {i + 1} expects dimension {node.dim}, got vector of length {v.shape[0]}"
            )
        return v

    return walk(tree)


def compose_partition(tree: PartitionNode, leaf_vectors: Sequence) -> MultiQubitState:
    """Compose block embeddings into a multi-qubit state (not renormalized)."""
    vec = compose_vectors(tree, leaf_vectors)
    m = vec.shape[0].bit_length() - 1
    if vec.shape[0] != 1 << m or m < 1:
        raise ValueError(f"total dimension {vec.shape[0]} is not a power of two")
    return MultiQubitState(m, vec)


def binary_trees(labels: Sequence[int]) -> Iterator[PartitionNode]:
    """Every full binary tree with qubit leaves ``labels`` in the given order."""
    labels = list(labels)
    if not labels:
        raise ValueError("need at least one leaf")
    if len(labels) == 1:
        yield Leaf((2,), labels[0])
        return
    for cut in range(1, len(labels)):
        for left in binary_trees(labels[:cut]):
            for right in binary_trees(labels[cut:]):
                yield Join(left, right)


def parse_tree(text: str, leaf_dim: int = 2) -> PartitionNode:
    """Parse nested-parentheses syntax like ``((1,2),(3,4))``.

    Labels are 1-based.  A parenthesized group with more than two members
    is read as a left-nested chain.
    """
    pos = 0
    s = "".join(text.split())

    def fail(msg):
        raise ValueError(f"bad tree syntax at offset {pos} in {text!r}: {msg}")

    def node():
        nonlocal pos
        if pos >= len(s):
            fail("unexpected end")
        if s[pos] == "(":
            pos += 1
            items = [node()]
            while pos < len(s) and s[pos] == ",":
                pos += 1
                items.append(node())
            if pos >= len(s) or s[pos] != ")":
                fail("expected ')'")
            pos += 1
            out = items[0]
            for nxt in items[1:]:
                out = Join(out, nxt)
            return out
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if start == pos:
            fail("expected a leaf label")
        label = int(s[start:pos])
        if label < 1:
            fail("labels are 1-based")
        return Leaf((leaf_dim,), label - 1)

    tree = node()
    if pos != len(s):
        fail("trailing characters")
    return tree


def format_tree(tree: PartitionNode) -> str:
    if isinstance(tree, Leaf):
        return "?" if tree.label is None else str(tree.label + 1)
    return f"({format_tree(tree.left)},{format_tree(tree.right)})"
