"""(CP^1)^m as the toric variety of the m-hypercube.

The affine coordinates are ``z_s = a^s_1 / a^s_0``.  Hypercube vertices
``eps in {-1, +1}^m`` are the exponent vectors of the embedding monomials;
vertex ``eps`` labels the amplitude with digits ``(1 + eps_j) / 2``, with
vertex components listed in written index order ``(x_m, ..., x_1)``.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .segre import QuadricBinomial, evaluate_binomials, segre_embed, single_swap_minors
from .state import ZERO_TOL, MultiIndex, MultiQubitState, SingleQubitFactor, random_factors


@dataclass(frozen=True)
class ChartAtlas:
    """The ``2**m`` affine charts covering (CP^1)^m.

    ``charts[r][s - 1]`` is ``-1`` when chart ``r + 1`` uses ``z_s**-1``
    and ``+1`` when it uses ``z_s``.  Chart ``r + 1`` inverts exactly the
    coordinates whose bit is set in ``r``.
    """

    m: int
    charts: tuple[tuple[int, ...], ...]

    def inverted(self, chart: int) -> tuple[int, ...]:
        """1-based positions ``s`` whose coordinate is inverted in 1-based ``chart``."""
        return tuple(s + 1 for s, e in enumerate(self.charts[chart - 1]) if e == -1)

    def describe(self, chart: int) -> str:
        inv = set(self.inverted(chart))
        parts = [f"z{s}^-1" if s in inv else f"z{s}" for s in range(1, self.m + 1)]
        return "(" + ", ".join(parts) + ")"

    def coordinates(self, chart: int, factors: Sequence[SingleQubitFactor]) -> tuple[complex, ...] | None:
        """Affine coordinates of a point in a chart, or ``None`` if it lies outside.

        ``factors`` is in written order (``factors[0]`` is qubit ``m``), as
        for :func:`segretoric.segre.segre_embed`.
        """
        if len(factors) != self.m:
            raise ValueError(f"expected {self.m} factors, got {len(factors)}")
        out = []
        for s, e in enumerate(self.charts[chart - 1], start=1):
            f = factors[self.m - s]
            num, den = (f.a1, f.a0) if e == 1 else (f.a0, f.a1)
            if den == 0:
                return None
            out.append(num / den)
        return tuple(out)

    def chart_for(self, factors: Sequence[SingleQubitFactor]) -> int:
        """A chart (1-based) containing the point; every point lies in one."""
        r = 0
        for s in range(1, self.m + 1):
            f = factors[self.m - s]
            if abs(f.a1) > abs(f.a0):
                r |= 1 << (s - 1)
        return r + 1


def hypercube_atlas(m: int) -> ChartAtlas:
    if m < 1:
        raise ValueError("qubit count must be >= 1")
    charts = tuple(
        tuple(-1 if (r >> s) & 1 else 1 for s in range(m)) for r in range(1 << m)
    )
    return ChartAtlas(m, charts)


@dataclass(frozen=True)
class VertexExponentMap:
    """Bijection between hypercube vertices and amplitude indices."""

    m: int

    def index_of(self, vertex: Sequence[int]) -> MultiIndex:
        if len(vertex) != self.m or any(e not in (-1, 1) for e in vertex):
            raise ValueError(f"not a vertex of the {self.m}-cube: {tuple(vertex)}")
        return MultiIndex.from_bits([(1 + e) // 2 for e in vertex])

    def vertex_of(self, index: MultiIndex) -> tuple[int, ...]:
        if index.m != self.m:
            raise ValueError(f"index {index} has length {index.m}, expected {self.m}")
        return tuple(2 * b - 1 for b in index.bits)

    def entries(self) -> list[tuple[tuple[int, ...], MultiIndex]]:
        return [(v, self.index_of(v)) for v in itertools.product((-1, 1), repeat=self.m)]


def toric_ideal_quadrics(m: int) -> list[QuadricBinomial]:
    """Degree-two binomials ``x_u x_v - x_u' x_v'`` with ``u + v = u' + v'``.

    ``u, v, u', v'`` run over hypercube vertices; each relation is mapped
    to amplitude indices and returned in canonical, sorted form.
    """
    if m < 2:
        raise ValueError("toric quadrics need at least 2 qubits")
    vmap = VertexExponentMap(m)
    verts = [np.array(v) for v in itertools.product((-1, 1), repeat=m)]
    by_sum = defaultdict(list)
    for i, j in itertools.combinations(range(len(verts)), 2):
        by_sum[tuple(verts[i] + verts[j])].append((i, j))
    out = set()
    for pairs in by_sum.values():
        for (i, j), (i2, j2) in itertools.combinations(pairs, 2):
            ranks = [vmap.index_of(tuple(verts[t])).rank for t in (i, j, i2, j2)]
            out.add(QuadricBinomial.canonical(m, *ranks))
    return sorted(out)


@dataclass(frozen=True)
class EquivalenceReport:
    """Evaluation-level comparison of the toric quadrics with the Segre minors.

    ``product_ok``: every toric quadric vanished on every sampled product
    state.  ``covanish_ok``: on every sampled state whose minors all
    vanished within ``tolerance``, the toric quadrics vanished within
    ``derived_tolerance``.
    """

    m: int
    trials: int
    seed: int
    tolerance: float
    derived_tolerance: float
    n_minors: int
    n_quadrics: int
    minors_contained: bool
    product_max_minor: float
    product_max_quadric: float
    dense_max_minor: float
    dense_max_quadric: float
    covanishing_states: int
    covanish_max_quadric: float
    product_ok: bool
    covanish_ok: bool

    @property
    def verdict(self) -> bool:
        return self.minors_contained and self.product_ok and self.covanish_ok


def _max_abs(binomials, state) -> float:
    return float(np.max(np.abs(evaluate_binomials(binomials, state))))


def ideal_equivalence_report(
    m: int, trials: int = 100, seed: int = 0, tolerance: float = ZERO_TOL
) -> EquivalenceReport:
    """Check on random states that the toric quadrics and the minors cut out the same set.

    A quadric that swaps the digits in a set ``S`` is a telescoping sum of
    single-swap minors, one per element of ``S`` or of its complement,
    whichever is smaller.  So when all minors are below ``tolerance`` (and
    amplitudes are bounded by 1) every quadric is below
    ``floor(m / 2) * tolerance``; that bound is the derived tolerance.
    """
    if m < 2:
        raise ValueError("need at least 2 qubits")
    if trials < 1:
        raise ValueError("trials must be positive")
    minors = single_swap_minors(m)
    quadrics = toric_ideal_quadrics(m)
    contained = {b.ranks() for b in minors} <= {b.ranks() for b in quadrics}
    derived = (m // 2) * tolerance

    rng = np.random.default_rng(seed)
    products = [segre_embed(random_factors(m, rng)) for _ in range(trials)]
    dense = []
    for _ in range(trials):
        v = rng.standard_normal(1 << m) + 1j * rng.standard_normal(1 << m)
        dense.append(MultiQubitState(m, v / np.linalg.norm(v)))

    pm = max(_max_abs(minors, s) for s in products)
    pq = max(_max_abs(quadrics, s) for s in products)
    dm = max(_max_abs(minors, s) for s in dense)
    dq = max(_max_abs(quadrics, s) for s in dense)

    covanishing = 0
    cov_q = 0.0
    cov_ok = True
    for s in products + dense:
        if _max_abs(minors, s) <= tolerance:
            covanishing += 1
            q = _max_abs(quadrics, s)
            cov_q = max(cov_q, q)
            cov_ok = cov_ok and q <= derived

    return EquivalenceReport(
        m=m,
        trials=trials,
        seed=seed,
        tolerance=tolerance,
        derived_tolerance=derived,
        n_minors=len(minors),
        n_quadrics=len(quadrics),
        minors_contained=contained,
        product_max_minor=pm,
        product_max_quadric=pq,
        dense_max_minor=dm,
        dense_max_quadric=dq,
        covanishing_states=covanishing,
        covanish_max_quadric=cov_q,
        product_ok=pq <= tolerance,
        covanish_ok=cov_ok,
    )
