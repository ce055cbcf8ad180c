"""Dense multi-qubit pure states.

Amplitudes are stored in a flat complex array of length ``2**m``.  A basis
label is written ``x_m x_{m-1} ... x_1`` left to right and its rank is the
integer with ``x_m`` as the most significant bit, so position ``s`` (1-based,
counted from the right) is bit ``s - 1`` of the rank.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

import numpy as np

#: Threshold below which ``| ||psi||^2 - 1 |`` counts as normalized.
NORM_TOL = 1e-12

#: Default threshold for calling a floating point residual zero.
ZERO_TOL = 1e-10

FAMILIES = ("ghz", "w", "product-basis", "random-product", "random-dense")


@dataclass(frozen=True, order=True)
class MultiIndex:
    """Basis label of an ``m``-qubit register, stored as its integer rank."""

    m: int
    rank: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"qubit count must be >= 1, got {self.m}")
        if not 0 <= self.rank < (1 << self.m):
            raise ValueError(f"rank {self.rank} out of range for m={self.m}")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "MultiIndex":
        """Build from digits ``(x_m, ..., x_1)`` in written order."""
        if len(bits) == 0:
            raise ValueError("empty index")
        rank = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"index digits must be 0 or 1, got {b!r}")
            rank = (rank << 1) | int(b)
        return cls(len(bits), rank)

    @classmethod
    def from_string(cls, text: str) -> "MultiIndex":
        if not text or any(c not in "01" for c in text):
            raise ValueError(f"invalid index string {text!r}")
        return cls(len(text), int(text, 2))

    @property
    def bits(self) -> tuple[int, ...]:
        """Digits ``(x_m, ..., x_1)`` in written order."""
        return tuple((self.rank >> (self.m - 1 - j)) & 1 for j in range(self.m))

    def digit(self, s: int) -> int:
        """Digit ``x_s`` at 1-based position ``s`` (``s = 1`` is rightmost)."""
        if not 1 <= s <= self.m:
            raise ValueError(f"position {s} out of range for m={self.m}")
        return (self.rank >> (s - 1)) & 1

    def __str__(self) -> str:
        return format(self.rank, f"0{self.m}b")


IndexLike = Union[MultiIndex, str, Sequence[int]]


def as_index(index: IndexLike, m: int | None = None) -> MultiIndex:
    """Coerce a string, digit sequence or :class:`MultiIndex`."""
    if isinstance(index, MultiIndex):
        idx = index
    elif isinstance(index, str):
        idx = MultiIndex.from_string(index)
    else:
        idx = MultiIndex.from_bits(tuple(index))
    if m is not None and idx.m != m:
        raise ValueError(f"index {idx} has length {idx.m}, expected {m}")
    return idx


@dataclass(frozen=True, eq=False)
class MultiQubitState:
    """Immutable vector of ``2**m`` complex amplitudes.

    The amplitude array is copied on construction and marked read-only.
    """

    m: int
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        if not isinstance(self.m, (int, np.integer)) or self.m < 1:
            raise ValueError(f"qubit count must be a positive integer, got {self.m!r}")
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.shape[0] != 1 << self.m:
            raise ValueError(
                f"expected {1 << self.m} amplitudes for m={self.m}, got {amps.shape[0]}"
            )
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        amps.flags.writeable = False
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return 1 << self.m

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    @property
    def normalized(self) -> bool:
        return abs(float(np.vdot(self.amplitudes, self.amplitudes).real) - 1.0) <= NORM_TOL

    def __getitem__(self, index: IndexLike | int) -> complex:
        if isinstance(index, (int, np.integer)):
            return complex(self.amplitudes[index])
        return complex(self.amplitudes[as_index(index, self.m).rank])

    def tensor(self) -> np.ndarray:
        """View as an ``m``-way ``2 x ... x 2`` array, axis 0 being ``x_m``."""
        return self.amplitudes.reshape((2,) * self.m)

    def permute_qubits(self, perm: Sequence[int]) -> "MultiQubitState":
        """Reorder tensor axes; ``perm`` is given in written (``x_m`` first) order."""
        return MultiQubitState(self.m, np.transpose(self.tensor(), perm).reshape(-1))

    def __eq__(self, other):
        if not isinstance(other, MultiQubitState):
            return NotImplemented
        return self.m == other.m and np.array_equal(self.amplitudes, other.amplitudes)

    def __hash__(self):
        return hash((self.m, self.amplitudes.tobytes()))


@dataclass(frozen=True)
class SingleQubitFactor:
    """Homogeneous coordinates ``(a0, a1)`` of a point of CP^1."""

    a0: complex
    a1: complex

    def __post_init__(self):
        a0, a1 = complex(self.a0), complex(self.a1)
        if not (np.isfinite(a0) and np.isfinite(a1)):
            raise ValueError("factor components must be finite")
        if a0 == 0 and a1 == 0:
            raise ValueError("single-qubit factor must be nonzero")
        object.__setattr__(self, "a0", a0)
        object.__setattr__(self, "a1", a1)

    def as_array(self) -> np.ndarray:
        return np.array([self.a0, self.a1], dtype=np.complex128)


def make_state(m: int, entries: Iterable[tuple[IndexLike, complex]]) -> MultiQubitState:
    """Build a state from sparse ``(index, amplitude)`` entries.

    Unlisted amplitudes are zero.  The result is not normalized.

    Raises
    ------
    ValueError
        On a repeated index, an index of the wrong length, or a non-finite
        amplitude.
    """
    if m < 1:
        raise ValueError(f"qubit count must be >= 1, got {m}")
    amps = np.zeros(1 << m, dtype=np.complex128)
    seen = set()
    for index, value in entries:
        idx = as_index(index, m)
        if idx.rank in seen:
            raise ValueError(f"duplicate index {idx}")
        value = complex(value)
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise ValueError(f"non-finite amplitude at index {idx}")
        seen.add(idx.rank)
        amps[idx.rank] = value
    return MultiQubitState(m, amps)


def normalize(state: MultiQubitState) -> MultiQubitState:
    norm = state.norm
    if norm == 0.0:
        raise ValueError("cannot normalize zero state")
    return MultiQubitState(state.m, state.amplitudes / norm)


def _complex_gaussian(rng: np.random.Generator, size) -> np.ndarray:
    return rng.standard_normal(size) + 1j * rng.standard_normal(size)


def random_factors(m: int, rng: np.random.Generator) -> list[SingleQubitFactor]:
    """Draw ``m`` normalized single-qubit factors with Gaussian components."""
    out = []
    for _ in range(m):
        v = _complex_gaussian(rng, 2)
        v /= np.linalg.norm(v)
        out.append(SingleQubitFactor(v[0], v[1]))
    return out


def family_state(name: str, m: int, seed: int | None = None) -> MultiQubitState:
    """Standard test states.

    ``ghz``, ``w`` and ``product-basis`` (``|0...0>``) are fixed; the random
    families are deterministic for a fixed ``seed``.
    """
    if name not in FAMILIES:
        raise ValueError(f"unknown state family {name!r}; choose from {', '.join(FAMILIES)}")
    if m < 1:
        raise ValueError(f"qubit count must be >= 1, got {m}")
    dim = 1 << m
    amps = np.zeros(dim, dtype=np.complex128)
    if name == "ghz":
        amps[0] = amps[dim - 1] = 1 / math.sqrt(2)
    elif name == "w":
        if m < 2:
            raise ValueError("the W state needs at least 2 qubits")
        amps[[1 << j for j in range(m)]] = 1 / math.sqrt(m)
    elif name == "product-basis":
        amps[0] = 1.0
    elif name == "random-product":
        from .segre import segre_embed

        return segre_embed(random_factors(m, np.random.default_rng(seed)))
    else:
        amps = _complex_gaussian(np.random.default_rng(seed), dim)
        amps /= np.linalg.norm(amps)
    return MultiQubitState(m, amps)
