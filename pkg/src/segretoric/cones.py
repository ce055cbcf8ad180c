"""Exact rational polyhedral cones, lattice polytopes and Laurent supports.

Everything here works over :class:`fractions.Fraction`; no floating point
value enters a containment or duality decision.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[int, ...]


class UnsupportedConeError(ValueError):
    """Raised for cones outside the supported class (e.g. non-simplicial duals)."""


def _as_vector(v: Iterable, n: int | None = None) -> Vector:
    out = []
    for x in v:
        if isinstance(x, float) and not x.is_integer():
            raise ValueError(f"lattice vectors need integer entries, got {x}")
        if isinstance(x, Fraction) and x.denominator != 1:
            raise ValueError(f"lattice vectors need integer entries, got {x}")
        out.append(int(x))
    if n is not None and len(out) != n:
        raise ValueError(f"expected a vector of dimension {n}, got {len(out)}")
    return tuple(out)


def _feasible_point(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """A nonnegative solution of ``A x = b``, or ``None`` if there is none.

    Phase one of the tableau simplex method with Bland's rule, in exact
    rational arithmetic.
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if rows == 0:
        return [Fraction(0)] * cols
    tab = []
    for i in range(rows):
        row = [Fraction(x) for x in A[i]] + [Fraction(int(i == j)) for j in range(rows)]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-x for x in row]
            row[cols + i] = Fraction(1)
            rhs = -rhs
        tab.append(row + [rhs])
    basis = [cols + i for i in range(rows)]
    width = cols + rows
    # reduced costs of the artificial-sum objective
    cost = [-sum(tab[i][j] for i in range(rows)) for j in range(cols)] + [Fraction(0)] * rows

    while True:
        entering = next((j for j in range(width) if cost[j] < 0), None)
        if entering is None:
            break
        best = None
        for i in range(rows):
            a = tab[i][entering]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            # cannot happen for a phase-one problem, whose objective is bounded below
            raise RuntimeError("unbounded phase-one problem")
        r = best[1]
        piv = tab[r][entering]
        tab[r] = [x / piv for x in tab[r]]
        for i in range(rows):
            if i != r and tab[i][entering] != 0:
                f = tab[i][entering]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[r])]
        f = cost[entering]
        cost = [c - f * y for c, y in zip(cost, tab[r][:-1])]
        basis[r] = entering

    x = [Fraction(0)] * width
    for i, j in enumerate(basis):
        x[j] = tab[i][-1]
    if any(x[cols:]):
        return None
    return x[:cols]


def _inverse(M: Sequence[Sequence]) -> list[list[Fraction]] | None:
    """Gauss-Jordan inverse over the rationals; ``None`` if singular."""
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if p is None:
            return None
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def rank(vectors: Sequence[Sequence]) -> int:
    """Rank of a list of rational vectors."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def primitive(v: Sequence[Fraction]) -> Vector:
    """Smallest positive multiple of a rational vector that is integral and primitive."""
    den = math.lcm(*(Fraction(x).denominator for x in v))
    ints = [int(Fraction(x) * den) for x in v]
    g = math.gcd(*ints)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in ints)


@dataclass(frozen=True)
class RationalCone:
    """``Cone(S)``: all nonnegative combinations of integer generators.

    Generators are deduplicated and stored sorted.
    """

    n: int
    generators: tuple[Vector, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ambient dimension must be >= 1")
        gens = sorted({_as_vector(g, self.n) for g in self.generators})
        if any(not any(g) for g in gens):
            raise ValueError("cone generators must be nonzero")
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def from_json(cls, data: dict) -> "RationalCone":
        return cls(int(data["n"]), tuple(tuple(g) for g in data["generators"]))

    def to_json(self) -> dict:
        return {"n": self.n, "generators": [list(g) for g in self.generators]}


def cone_contains(cone: RationalCone, v: Sequence[int]) -> bool:
    return cone_coefficients(cone, v) is not None


def cone_coefficients(cone: RationalCone, v: Sequence[int]) -> list[Fraction] | None:
    """Nonnegative ``lambda`` with ``sum lambda_i g_i = v``, or ``None``."""
    v = _as_vector(v, cone.n)
    if not cone.generators:
        return [] if not any(v) else None
    A = [[g[i] for g in cone.generators] for i in range(cone.n)]
    return _feasible_point(A, v)


def dual_cone(cone: RationalCone) -> RationalCone:
    """Generators of ``{u : <u, v> >= 0 for all v in cone}``.

    Only full-dimensional simplicial cones are supported: the dual
    generators are the columns of the inverse generator matrix, made
    primitive.
    """
    gens = cone.generators
    if len(gens) != cone.n:
        raise UnsupportedConeError(
            f"dual cone needs exactly n={cone.n} linearly independent generators, got {len(gens)}"
        )
    inv = _inverse(gens)
    if inv is None:
        raise UnsupportedConeError("generators are linearly dependent; cone is not full-dimensional")
    return RationalCone(cone.n, tuple(primitive([inv[i][j] for i in range(cone.n)]) for j in range(cone.n)))


def in_dual(cone: RationalCone, u: Sequence[int]) -> bool:
    """Membership in the dual cone, valid for any generator set."""
    u = _as_vector(u, cone.n)
    return all(sum(a * b for a, b in zip(u, g)) >= 0 for g in cone.generators)


def is_strongly_convex(cone: RationalCone) -> bool:
    """True iff the cone contains no line.

    Decided by infeasibility of ``sum lambda_i g_i = 0, sum lambda_i = 1,
    lambda >= 0``.
    """
    if not cone.generators:
        return True
    A = [[g[i] for g in cone.generators] for i in range(cone.n)]
    A.append([1] * len(cone.generators))
    return _feasible_point(A, [0] * cone.n + [1]) is None


def lattice_support(cone: RationalCone, box_bound: int) -> list[Vector]:
    """Lattice points of the cone inside ``[-box_bound, box_bound]^n``, sorted."""
    if box_bound < 1:
        raise ValueError("box bound must be >= 1")
    rng = range(-box_bound, box_bound + 1)
    return [p for p in itertools.product(rng, repeat=cone.n) if cone_contains(cone, p)]


@dataclass(frozen=True)
class LatticePolytope:
    """``Conv(S)`` for a finite set of integer points."""

    n: int
    vertices: tuple[Vector, ...]

    def __post_init__(self):
        verts = sorted({_as_vector(v, self.n) for v in self.vertices})
        if not verts:
            raise ValueError("polytope needs at least one point")
        object.__setattr__(self, "vertices", tuple(verts))

    @classmethod
    def hypercube(cls, m: int) -> "LatticePolytope":
        return cls(m, tuple(itertools.product((-1, 1), repeat=m)))

    def contains(self, p: Sequence[int]) -> bool:
        p = _as_vector(p, self.n)
        A = [[v[i] for v in self.vertices] for i in range(self.n)]
        A.append([1] * len(self.vertices))
        return _feasible_point(A, list(p) + [1]) is not None

    def lattice_points(self) -> list[Vector]:
        lo = [min(v[i] for v in self.vertices) for i in range(self.n)]
        hi = [max(v[i] for v in self.vertices) for i in range(self.n)]
        box = itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi)))
        return [p for p in box if self.contains(p)]


@dataclass(frozen=True)
class LatticeMonomial:
    """``coefficient * z**exponent`` with an integer exponent vector."""

    exponent: Vector
    coefficient: complex = 1.0

    def __post_init__(self):
        if complex(self.coefficient) == 0:
            raise ValueError("monomial coefficient must be nonzero")
        object.__setattr__(self, "exponent", _as_vector(self.exponent))


def support(terms: Iterable[LatticeMonomial]) -> set[Vector]:
    """Exponents with nonzero total coefficient after collecting like terms."""
    acc: dict[Vector, complex] = {}
    for t in terms:
        acc[t.exponent] = acc.get(t.exponent, 0) + complex(t.coefficient)
    return {e for e, c in acc.items() if c != 0}


def in_cone_algebra(cone: RationalCone, terms: Iterable[LatticeMonomial]) -> bool:
    """Whether a Laurent polynomial has its support inside the cone."""
    return all(cone_contains(cone, e) for e in support(terms))
