"""JSON formats for states, factor lists, cones and binomial lists."""

from __future__ import annotations

import json
import math
from typing import Any

import numpy as np

from .cones import RationalCone
from .segre import QuadricBinomial
from .state import MultiIndex, MultiQubitState, SingleQubitFactor, make_state

STATE_SCHEMA = {
    "type": "object",
    "required": ["m", "amplitudes"],
    "properties": {
        "m": {"type": "integer", "minimum": 1},
        "amplitudes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["index", "re", "im"],
                "properties": {
                    "index": {"type": "string", "pattern": "^[01]+$"},
                    "re": {"type": "number"},
                    "im": {"type": "number"},
                },
            },
        },
    },
}

BINOMIAL_LIST_SCHEMA = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["plus", "minus"],
        "properties": {
            "plus": {"type": "array", "items": {"type": "string", "pattern": "^[01]+$"}, "minItems": 2, "maxItems": 2},
            "minus": {"type": "array", "items": {"type": "string", "pattern": "^[01]+$"}, "minItems": 2, "maxItems": 2},
        },
    },
}

CONE_SCHEMA = {
    "type": "object",
    "required": ["n", "generators"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "generators": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
    },
}

ANALYSIS_SCHEMA = {
    "type": "object",
    "required": ["m", "norm", "separability", "measure", "timing_ms"],
    "properties": {
        "m": {"type": "integer"},
        "norm": {"type": "number"},
        "separability": {
            "type": "object",
            "required": ["separable", "max_residual", "witness", "tolerance"],
        },
        "measure": {"type": "object", "required": ["value", "mode", "norm_const"]},
        "timing_ms": {"type": "number"},
    },
}


class FormatError(ValueError):
    """Malformed input document; the message names the offending field."""


def _number(obj: dict, key: str, where: str) -> float:
    if key not in obj:
        raise FormatError(f"{where}: missing field {key!r}")
    x = obj[key]
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise FormatError(f"{where}.{key}: expected a number, got {type(x).__name__}")
    if not math.isfinite(x):
        raise FormatError(f"{where}.{key}: non-finite value")
    return float(x)


def loads(text: str, what: str = "input") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{what}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def state_from_json(data: Any) -> MultiQubitState:
    if not isinstance(data, dict):
        raise FormatError("state: expected a JSON object")
    m = data.get("m")
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise FormatError("state.m: expected a positive integer")
    amps = data.get("amplitudes")
    if not isinstance(amps, list):
        raise FormatError("state.amplitudes: expected a list")
    entries = []
    for i, item in enumerate(amps):
        where = f"state.amplitudes[{i}]"
        if not isinstance(item, dict):
            raise FormatError(f"{where}: expected an object")
        index = item.get("index")
        if not isinstance(index, str):
            raise FormatError(f"{where}.index: expected a string of 0/1 digits")
        if len(index) != m:
            raise FormatError(f"{where}.index: {index!r} has length {len(index)}, expected {m}")
        try:
            idx = MultiIndex.from_string(index)
        except ValueError as exc:
            raise FormatError(f"{where}.index: {exc}") from None
        entries.append((idx, complex(_number(item, "re", where), _number(item, "im", where))))
    try:
        return make_state(m, entries)
    except ValueError as exc:
        raise FormatError(f"state: {exc}") from None


def state_to_json(state: MultiQubitState) -> dict:
    """All ``2**m`` amplitudes in rank order."""
    return {
        "m": state.m,
        "amplitudes": [
            {"index": str(MultiIndex(state.m, r)), "re": float(a.real), "im": float(a.imag)}
            for r, a in enumerate(state.amplitudes)
        ],
    }


def _component(x: Any, where: str) -> complex:
    if isinstance(x, dict):
        return complex(_number(x, "re", where), _number(x, "im", where))
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise FormatError(f"{where}: expected a number or {{re, im}} object")
    return complex(x)


def factors_from_json(data: Any) -> list[SingleQubitFactor]:
    """Parse ``{"factors": [[a0, a1], ...]}``; components are numbers or ``{re, im}``.

    ``factors[0]`` is the leftmost qubit ``x_m``.
    """
    if not isinstance(data, dict) or not isinstance(data.get("factors"), list):
        raise FormatError("factors: expected an object with a 'factors' list")
    out = []
    for i, pair in enumerate(data["factors"]):
        where = f"factors[{i}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise FormatError(f"{where}: expected a pair [a0, a1]")
        a0 = _component(pair[0], f"{where}[0]")
        a1 = _component(pair[1], f"{where}[1]")
        try:
            out.append(SingleQubitFactor(a0, a1))
        except ValueError as exc:
            raise FormatError(f"{where}: {exc}") from None
    if not out:
        raise FormatError("factors: list is empty")
    return out


def factors_to_json(factors) -> dict:
    return {
        "factors": [
            [{"re": f.a0.real, "im": f.a0.imag}, {"re": f.a1.real, "im": f.a1.imag}] for f in factors
        ]
    }


def cone_from_json(data: Any) -> RationalCone:
    if not isinstance(data, dict):
        raise FormatError("cone: expected a JSON object")
    n = data.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise FormatError("cone.n: expected a positive integer")
    gens = data.get("generators")
    if not isinstance(gens, list):
        raise FormatError("cone.generators: expected a list")
    for i, g in enumerate(gens):
        if not isinstance(g, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in g):
            raise FormatError(f"cone.generators[{i}]: expected a list of integers")
        if len(g) != n:
            raise FormatError(f"cone.generators[{i}]: length {len(g)}, expected {n}")
    try:
        return RationalCone.from_json(data)
    except ValueError as exc:
        raise FormatError(f"cone: {exc}") from None


def binomials_to_json(binomials) -> list[dict]:
    return [b.to_json() for b in binomials]


def binomials_from_json(data: Any) -> list[QuadricBinomial]:
    if not isinstance(data, list):
        raise FormatError("binomials: expected a list")
    out = []
    for i, item in enumerate(data):
        try:
            plus = tuple(MultiIndex.from_string(s) for s in item["plus"])
            minus = tuple(MultiIndex.from_string(s) for s in item["minus"])
            out.append(QuadricBinomial(plus, minus))
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"binomials[{i}]: {exc}") from None
    return out


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, default=_default) + "\n"


def _default(x):
    if isinstance(x, np.generic):
        return x.item()
    raise TypeError(f"cannot serialize {type(x).__name__}")
