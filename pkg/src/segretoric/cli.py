"""Command line front end.

Exit codes: 0 success, 2 input error, 3 domain error, 4 unsupported operation.
Machine output goes to stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
import time
from fractions import Fraction

from . import io
from .cones import (
    UnsupportedConeError,
    cone_coefficients,
    dual_cone,
    is_strongly_convex,
    lattice_support,
)
from .partition import compose_partition, format_tree, leaves, parse_tree
from .segre import (
    MEASURE_MODES,
    MeasureConfig,
    entanglement_measure,
    segre_embed,
    separability_report,
)
from .state import FAMILIES, ZERO_TOL, family_state, normalize
from .toric import hypercube_atlas, ideal_equivalence_report, toric_ideal_quadrics

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DOMAIN = 3
EXIT_UNSUPPORTED = 4

GLOBAL_DEFAULTS = {
    "tolerance": ZERO_TOL,
    "output": "json",
    "seed": 0,
    "norm_const": 1.0,
    "measure_mode": "full",
}


class CommandError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str, what: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise CommandError(EXIT_INPUT, f"{what}: cannot read {path}: {exc.strerror}") from None
    try:
        return io.loads(text, what)
    except io.FormatError as exc:
        raise CommandError(EXIT_INPUT, str(exc)) from None


def _input_error(fn, *args):
    try:
        return fn(*args)
    except ValueError as exc:
        raise CommandError(EXIT_INPUT, str(exc)) from None


def analyze_state(state, tolerance=ZERO_TOL, config: MeasureConfig | None = None) -> dict:
    """normalize -> separability -> measure, as a JSON-ready report."""
    config = config or MeasureConfig()
    t0 = time.perf_counter()
    norm = state.norm
    try:
        unit = normalize(state)
    except ValueError as exc:
        raise CommandError(EXIT_DOMAIN, str(exc)) from None
    if unit.m < 2:
        raise CommandError(EXIT_DOMAIN, "analysis needs at least 2 qubits")
    rep = separability_report(unit, tolerance)
    value = entanglement_measure(unit, config)
    return {
        "m": unit.m,
        "norm": norm,
        "separability": {
            "separable": rep.separable,
            "max_residual": rep.max_residual,
            "witness": rep.witness.to_json(),
            "tolerance": rep.tolerance,
        },
        "measure": {"value": value, "mode": config.mode, "norm_const": config.norm_const},
        "timing_ms": (time.perf_counter() - t0) * 1e3,
    }


def cmd_analyze(args) -> object:
    data = _read(args.state_file, "state")
    try:
        state = io.state_from_json(data)
    except io.FormatError as exc:
        raise CommandError(EXIT_INPUT, str(exc)) from None
    config = _input_error(MeasureConfig, args.norm_const, args.measure_mode)
    return analyze_state(state, args.tolerance, config)


def cmd_embed(args) -> object:
    try:
        factors = io.factors_from_json(_read(args.factors, "factors"))
    except io.FormatError as exc:
        raise CommandError(EXIT_INPUT, str(exc)) from None
    if args.tree is None:
        if args.check_commute:
            raise CommandError(EXIT_INPUT, "--check-commute needs --tree")
        return io.state_to_json(segre_embed(factors))
    tree = _input_error(parse_tree, args.tree)
    n_leaves = len(leaves(tree))
    if n_leaves != len(factors):
        raise CommandError(
            EXIT_INPUT, f"tree {format_tree(tree)} has {n_leaves} leaves but {len(factors)} factors were given"
        )
    composed = _input_error(compose_partition, tree, [f.as_array() for f in factors])
    out = io.state_to_json(normalize(composed))
    if args.check_commute:
        direct = segre_embed(factors, normalize=False)
        dev = float(abs(composed.amplitudes - direct.amplitudes).max())
        out["commute_check"] = {"tree": format_tree(tree), "max_deviation": dev, "ok": dev <= 1e-12}
    return out


def cmd_family(args) -> object:
    try:
        state = family_state(args.name, args.m, args.seed)
    except ValueError as exc:
        raise CommandError(EXIT_INPUT, str(exc)) from None
    return io.state_to_json(state)


def _cone(args):
    try:
        return io.cone_from_json(_read(args.cone_file, "cone"))
    except io.FormatError as exc:
        raise CommandError(EXIT_INPUT, str(exc)) from None


def _parse_vector(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise CommandError(EXIT_INPUT, f"--vector: expected comma-separated integers, got {text!r}") from None


def cmd_toric(args) -> object:
    sub = args.toric_command
    if sub == "atlas":
        atlas = _input_error(hypercube_atlas, args.m)
        return {
            "m": atlas.m,
            "charts": [
                {"chart": i, "signs": list(signs), "coordinates": atlas.describe(i)}
                for i, signs in enumerate(atlas.charts, start=1)
            ],
        }
    if sub == "quadrics":
        return io.binomials_to_json(_input_error(toric_ideal_quadrics, args.m))
    if sub == "equiv":
        rep = _input_error(ideal_equivalence_report, args.m, args.trials, args.seed, args.tolerance)
        out = dataclasses.asdict(rep)
        out["verdict"] = rep.verdict
        return out
    cone = _cone(args)
    if sub == "cone-dual":
        try:
            return dual_cone(cone).to_json()
        except UnsupportedConeError as exc:
            raise CommandError(EXIT_UNSUPPORTED, f"unsupported dual cone: {exc}") from None
    if sub == "cone-check":
        out = {"cone": cone.to_json(), "strongly_convex": is_strongly_convex(cone)}
        if args.vector is not None:
            v = _parse_vector(args.vector)
            if len(v) != cone.n:
                raise CommandError(EXIT_INPUT, f"--vector has length {len(v)}, cone has n={cone.n}")
            lam = cone_coefficients(cone, v)
            out["vector"] = v
            out["contains"] = lam is not None
            out["coefficients"] = None if lam is None else [str(Fraction(x)) for x in lam]
        return out
    if sub == "support":
        if args.bound < 1:
            raise CommandError(EXIT_INPUT, "--bound must be >= 1")
        return {"bound": args.bound, "points": [list(p) for p in lattice_support(cone, args.bound)]}
    raise CommandError(EXIT_INPUT, f"unknown toric subcommand {sub!r}")


def _common(suppress: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    d = {"default": argparse.SUPPRESS} if suppress else {}
    p.add_argument("--tolerance", type=float, help="zero threshold for residuals (default 1e-10)", **d)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="output", action="store_const", const="json", **d)
    fmt.add_argument("--text", dest="output", action="store_const", const="text", **d)
    p.add_argument("--seed", type=int, help="random seed (default 0)", **d)
    p.add_argument("--norm-const", type=float, help="measure normalization constant (default 1)", **d)
    p.add_argument("--measure-mode", choices=MEASURE_MODES, **d)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common(suppress=True)
    parser = argparse.ArgumentParser(prog="segretoric", description=__doc__.splitlines()[0], parents=[_common(False)])
    parser.set_defaults(**GLOBAL_DEFAULTS)
    cmds = parser.add_subparsers(dest="command", required=True)

    p = cmds.add_parser("analyze", parents=[common], help="separability verdict and entanglement measure")
    p.add_argument("state_file", help="state JSON file, or - for stdin")
    p.set_defaults(func=cmd_analyze)

    p = cmds.add_parser("embed", parents=[common], help="Segre embedding of single-qubit factors")
    p.add_argument("--factors", required=True, help='JSON file {"factors": [[a0, a1], ...]}, or -')
    p.add_argument("--tree", help="partition tree such as ((1,2),(3,4))")
    p.add_argument("--check-commute", action="store_true", help="compare with the direct embedding")
    p.add_argument("--out", help="write the result here instead of stdout")
    p.set_defaults(func=cmd_embed)

    p = cmds.add_parser("family", parents=[common], help="write a standard test state")
    p.add_argument("name", help=", ".join(FAMILIES))
    p.add_argument("m", type=int)
    p.add_argument("--out", help="write the state here instead of stdout")
    p.set_defaults(func=cmd_family)

    p = cmds.add_parser("toric", parents=[common], help="hypercube toric description and cone tools")
    tsub = p.add_subparsers(dest="toric_command", required=True)
    for name in ("atlas", "quadrics"):
        q = tsub.add_parser(name, parents=[common])
        q.add_argument("m", type=int)
    q = tsub.add_parser("equiv", parents=[common])
    q.add_argument("m", type=int)
    q.add_argument("--trials", type=int, default=100)
    for name in ("cone-dual", "cone-check", "support"):
        q = tsub.add_parser(name, parents=[common])
        q.add_argument("cone_file")
        if name == "cone-check":
            q.add_argument("--vector", help="comma-separated integer vector to test for membership")
        if name == "support":
            q.add_argument("--bound", type=int, default=1)
    p.set_defaults(func=cmd_toric)
    return parser


def _text(obj, prefix="") -> list[str]:
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            lines += _text(v, f"{prefix}{k}.")
        return lines
    if isinstance(obj, list) and obj and isinstance(obj[0], (dict, list)):
        lines = []
        for i, v in enumerate(obj):
            lines += _text(v, f"{prefix}{i}.")
        return lines
    return [f"{prefix.rstrip('.')}: {obj}"]


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except CommandError as exc:
        print(f"segretoric: error: {exc}", file=sys.stderr)
        return exc.code
    text = io.dumps(result) if args.output == "json" else "\n".join(_text(result)) + "\n"
    out_path = getattr(args, "out", None)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
