"""Segre embedding, its quadric ideal, and the swap-binomial entanglement measure."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .state import (
    ZERO_TOL,
    MultiIndex,
    MultiQubitState,
    SingleQubitFactor,
)

MEASURE_MODES = ("full", "minors-only")


@dataclass(frozen=True, order=True)
class QuadricBinomial:
    """The quadric ``a_k a_l - a_k' a_l'`` with ``plus=(k, l)``, ``minus=(k', l')``.

    Construction checks that the two index pairs agree as multisets at every
    position, which is what makes the binomial vanish on product states.
    Use :meth:`canonical` to get the normal form used for deduplication.
    """

    plus: tuple[MultiIndex, MultiIndex]
    minus: tuple[MultiIndex, MultiIndex]

    def __post_init__(self):
        k, l = self.plus
        k2, l2 = self.minus
        m = k.m
        if not (l.m == k2.m == l2.m == m):
            raise ValueError("all indices of a binomial must have the same length")
        for s in range(1, m + 1):
            if sorted((k.digit(s), l.digit(s))) != sorted((k2.digit(s), l2.digit(s))):
                raise ValueError(
                    f"unbalanced binomial at position {s}: {k},{l} vs {k2},{l2}"
                )

    @property
    def m(self) -> int:
        return self.plus[0].m

    @classmethod
    def canonical(cls, m: int, k: int, l: int, k2: int, l2: int) -> "QuadricBinomial":
        """Normal form of ``a_k a_l - a_k2 a_l2`` given integer ranks.

        Each pair is sorted and the smaller pair goes first.  The overall
        sign may flip, which is irrelevant for the ideal and for residual
        magnitudes.
        """
        p = tuple(sorted((k, l)))
        q = tuple(sorted((k2, l2)))
        if p == q:
            raise ValueError("binomial is identically zero")
        if q < p:
            p, q = q, p
        return cls(
            (MultiIndex(m, p[0]), MultiIndex(m, p[1])),
            (MultiIndex(m, q[0]), MultiIndex(m, q[1])),
        )

    def ranks(self) -> tuple[int, int, int, int]:
        return (self.plus[0].rank, self.plus[1].rank, self.minus[0].rank, self.minus[1].rank)

    def to_json(self) -> dict:
        return {
            "plus": [str(self.plus[0]), str(self.plus[1])],
            "minus": [str(self.minus[0]), str(self.minus[1])],
        }

    def __str__(self) -> str:
        k, l = self.plus
        k2, l2 = self.minus
        return f"a_{k} a_{l} - a_{k2} a_{l2}"


@dataclass(frozen=True)
class SeparabilityReport:
    separable: bool
    max_residual: float
    witness: QuadricBinomial
    tolerance: float


@dataclass(frozen=True)
class MeasureConfig:
    """Options for :func:`entanglement_measure`.

    ``norm_const`` multiplies the sum of squared terms before the square
    root.  ``mode="minors-only"`` keeps only single-position swaps.
    """

    norm_const: float = 1.0
    mode: str = "full"

    def __post_init__(self):
        if self.mode not in MEASURE_MODES:
            raise ValueError(f"unknown measure mode {self.mode!r}")
        if not (self.norm_const > 0 and np.isfinite(self.norm_const)):
            raise ValueError("normalization constant must be positive and finite")


def _submasks(mask: int):
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


@lru_cache(maxsize=None)
def swap_terms(m: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """All swap terms ``(k, l, k', l', |S|)`` as rank arrays.

    One row per unordered pair ``{k, l}`` (``k < l``) and per nonempty proper
    subset ``S`` of the positions where ``k`` and ``l`` differ; ``k'`` and
    ``l'`` are ``k`` and ``l`` with the digits in ``S`` exchanged.  ``S`` and
    its complement give rows with equal products and both are kept.
    """
    rows = []
    for k in range(1 << m):
        for l in range(k + 1, 1 << m):
            diff = k ^ l
            for sub in _submasks(diff):
                if sub == diff:
                    continue
                rows.append((k, l, k ^ sub, l ^ sub, bin(sub).count("1")))
    arr = np.array(rows, dtype=np.int64).reshape(-1, 5)
    cols = tuple(np.ascontiguousarray(arr[:, j]) for j in range(5))
    for c in cols:
        c.flags.writeable = False
    return cols


@lru_cache(maxsize=None)
def _minors(m: int) -> tuple[QuadricBinomial, ...]:
    k, l, k2, l2, size = swap_terms(m)
    single = size == 1
    seen = set()
    for row in zip(k[single], l[single], k2[single], l2[single]):
        seen.add(QuadricBinomial.canonical(m, *map(int, row)))
    return tuple(sorted(seen))


@lru_cache(maxsize=None)
def _rank_table(binomials: tuple[QuadricBinomial, ...]) -> np.ndarray:
    table = np.array([b.ranks() for b in binomials], dtype=np.int64).reshape(-1, 4)
    table.flags.writeable = False
    return table


def single_swap_minors(m: int) -> list[QuadricBinomial]:
    """Two-by-two minors of the amplitude tensor, one swap position each.

    Returns every ``a_x a_y - a_x' a_y'`` where ``x', y'`` come from ``x, y``
    by exchanging the digit at a single position ``s`` with ``x_s != y_s``,
    skipping pairs that differ only at ``s``.  Sorted and canonical.
    """
    if m < 2:
        raise ValueError("single-swap minors need at least 2 qubits")
    return list(_minors(m))


def _check_dims(m: int, state: MultiQubitState):
    if state.m != m:
        raise ValueError(f"binomial has m={m} but state has m={state.m}")


def evaluate_binomial(b: QuadricBinomial, state: MultiQubitState) -> complex:
    _check_dims(b.m, state)
    a = state.amplitudes
    k, l, k2, l2 = b.ranks()
    return complex(a[k] * a[l] - a[k2] * a[l2])


def evaluate_binomials(
    binomials: Sequence[QuadricBinomial], state: MultiQubitState
) -> np.ndarray:
    """Vectorized :func:`evaluate_binomial` over a sequence of binomials."""
    binomials = tuple(binomials)
    if not binomials:
        return np.zeros(0, dtype=np.complex128)
    _check_dims(binomials[0].m, state)
    t = _rank_table(binomials)
    a = state.amplitudes
    return a[t[:, 0]] * a[t[:, 1]] - a[t[:, 2]] * a[t[:, 3]]


def max_residual(
    binomials: Sequence[QuadricBinomial], state: MultiQubitState
) -> tuple[float, QuadricBinomial]:
    """Largest ``|b(state)|`` and a binomial attaining it."""
    binomials = tuple(binomials)
    if not binomials:
        raise ValueError("no binomials to evaluate")
    values = np.abs(evaluate_binomials(binomials, state))
    i = int(np.argmax(values))
    return float(values[i]), binomials[i]


def separability_report(
    state: MultiQubitState, tolerance: float = ZERO_TOL
) -> SeparabilityReport:
    """Decide full separability by evaluating every single-swap minor."""
    if state.m < 2:
        raise ValueError("separability needs at least 2 qubits")
    if not tolerance > 0:
        raise ValueError("tolerance must be positive")
    residual, witness = max_residual(_minors(state.m), state)
    return SeparabilityReport(residual <= tolerance, residual, witness, tolerance)


def segre_embed(
    factors: Sequence[SingleQubitFactor | Sequence[complex]], normalize: bool = True
) -> MultiQubitState:
    """Segre map of ``m`` single-qubit factors.

    ``factors[0]`` is the leftmost qubit ``x_m`` and ``factors[-1]`` is
    ``x_1``.  The amplitude at ``(i_m, ..., i_1)`` is the product of the
    selected factor components.  The result is rescaled to unit norm unless
    ``normalize=False``.
    """
    if len(factors) == 0:
        raise ValueError("need at least one factor")
    fs = [f if isinstance(f, SingleQubitFactor) else SingleQubitFactor(*f) for f in factors]
    m = len(fs)
    ranks = np.arange(1 << m)
    amps = np.ones(1 << m, dtype=np.complex128)
    for j, f in enumerate(fs):
        bit = (ranks >> (m - 1 - j)) & 1
        amps *= np.where(bit == 1, f.a1, f.a0)
    if normalize:
        amps /= np.linalg.norm(amps)
    return MultiQubitState(m, amps)


def entanglement_measure(
    state: MultiQubitState, config: MeasureConfig | None = None
) -> float:
    """Square root of the weighted sum of ``|a_k a_l - a_k' a_l'|^2`` over swap terms.

    The terms are those of :func:`swap_terms`.  The value is zero exactly
    when every swap binomial vanishes, i.e. on product states.
    """
    config = config or MeasureConfig()
    if state.m < 2:
        raise ValueError("the measure needs at least 2 qubits")
    if not state.normalized:
        raise ValueError("entanglement measure requires a normalized state")
    k, l, k2, l2, size = swap_terms(state.m)
    if config.mode == "minors-only":
        keep = size == 1
        k, l, k2, l2 = k[keep], l[keep], k2[keep], l2[keep]
    a = state.amplitudes
    vals = a[k] * a[l] - a[k2] * a[l2]
    total = float(np.sum(vals.real**2 + vals.imag**2))
    return float(np.sqrt(config.norm_const * total))


def canonical_set(binomials: Iterable[QuadricBinomial]) -> set[tuple[int, int, int, int]]:
    """Rank tuples of the canonical forms, for set comparisons."""
    return {QuadricBinomial.canonical(b.m, *b.ranks()).ranks() for b in binomials}
