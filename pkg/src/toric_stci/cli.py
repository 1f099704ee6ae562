"""Command-line interface.

One subcommand per question: `toric-ideal` prints the reduced Groebner basis,
`verify` runs the set-theoretic cut-out certification, `points` enumerates
F_p solutions, `witness` reconstructs a parameter point, and `bounds` reports
the known bounds on the number of defining equations.

Exit codes: 0 on success (and a verdict that holds), 2 for a well-formed
negative (verification failed, witness absent), 1 for usage or computation
errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .exactmath import field_from_label
from .family import (
    CandidatesNotProvided,
    FamilyHypothesisError,
    candidate_binomials,
    family_config,
    make_family,
    rank_bounds,
    reconstruct_witness,
)
from .groebner import (
    DEFAULT_STEP_LIMIT,
    IdealPresentation,
    StepLimitExceeded,
    ideal_to_json,
)
from .polyring import Grevlex, Lex, ParseError, format_poly, parse_poly
from .toric import (
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapExceeded,
    PointConfiguration,
    ambient_ring,
    solution_set,
    toric_ideal,
)
from .verify import certify, finite_field_crosscheck

STEP_LIMIT_ENV = "TORIC_STCI_STEP_LIMIT"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_family_spec(spec: str) -> dict:
    """Parse "n=<int>,d=<int>,a=<int>[,<int>...]"."""
    values = {"n": None, "d": None, "a": None}
    current = None
    for token in spec.split(","):
        token = token.strip()
        if "=" in token:
            key, _, raw = token.partition("=")
            key = key.strip()
            if key not in values:
                raise UsageError(f"unknown family parameter {key!r}")
            if values[key] is not None:
                raise UsageError(f"duplicate family parameter {key!r}")
            try:
                value = int(raw)
            except ValueError:
                raise UsageError(f"family parameter {key} is not an integer: {raw!r}") from None
            values[key] = [value] if key == "a" else value
            current = key
        else:
            if current != "a":
                raise UsageError(f"unexpected bare value {token!r} in family spec")
            try:
                values["a"].append(int(token))
            except ValueError:
                raise UsageError(f"family exponent is not an integer: {token!r}") from None
    if values["n"] is None or values["d"] is None or values["a"] is None:
        raise UsageError("family spec needs n=, d= and a= (e.g. n=3,d=6,a=1,1)")
    return values


def _parse_field(label: str):
    try:
        return field_from_label(label)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_order(name: str):
    if name == "grevlex":
        return Grevlex()
    if name == "lex":
        return Lex()
    raise UsageError(f"unknown order {name!r} (choose grevlex or lex)")


def _resolve_step_limit(args) -> int:
    if args.step_limit is not None:
        return args.step_limit
    env = os.environ.get(STEP_LIMIT_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{STEP_LIMIT_ENV} is not an integer: {env!r}") from None
    return DEFAULT_STEP_LIMIT


def _load_inputs(args):
    """Resolve the input source into (config, params-or-None)."""
    if bool(args.family) == bool(args.config):
        raise UsageError("exactly one of --family and --config is required")
    if args.family:
        spec = _parse_family_spec(args.family)
        params = make_family(spec["n"], spec["d"], spec["a"], strict=not args.no_strict)
        return family_config(params), params
    with open(args.config, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    return PointConfiguration.from_json(obj), None


def _load_candidates(args, config, params, field, order):
    """Candidate polynomials for verify/points: a file, or the built-ins."""
    ring = ambient_ring(config, field, order)
    if getattr(args, "candidates", None):
        if getattr(args, "candidates_builtin", False):
            raise UsageError("--candidates and --candidates-builtin are mutually exclusive")
        with open(args.candidates, "r", encoding="utf-8") as fh:
            lines = [line.strip() for line in fh]
        polys = [parse_poly(line, ring) for line in lines if line]
        if not polys:
            raise UsageError(f"candidate file {args.candidates!r} contains no polynomials")
        return polys
    if params is None:
        raise UsageError("--candidates <file> is required when the input is a --config file")
    return list(candidate_binomials(params, field, order))


def _write_json(args, payload) -> None:
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _cmd_toric_ideal(args, out) -> int:
    field = _parse_field(args.field)
    order = _parse_order(args.order)
    config, _ = _load_inputs(args)
    gb = toric_ideal(config, field, order, step_limit=_resolve_step_limit(args))
    for g in gb.elements:
        print(format_poly(g), file=out)
    if not gb.elements:
        print("0", file=out)
    _write_json(args, ideal_to_json(IdealPresentation(gb.ring, gb.elements)))
    return 0


def _cmd_verify(args, out) -> int:
    field = _parse_field(args.field)
    order = _parse_order(args.order)
    config, params = _load_inputs(args)
    candidates = _load_candidates(args, config, params, field, order)
    verdict, gb = certify(
        config, candidates, field, order, step_limit=_resolve_step_limit(args)
    )
    print("HOLDS" if verdict.holds else "FAILS", file=out)
    for cand, nf in verdict.forward_failures:
        print(f"forward failure: {format_poly(cand)} has normal form {format_poly(nf)}", file=out)
    for gen, note in verdict.reverse_failures:
        print(f"reverse failure: {format_poly(gen)} is {note}", file=out)
    reports = []
    for p in args.crosscheck or []:
        report = finite_field_crosscheck(
            config, candidates, p, gb=gb, cap=args.enum_cap, step_limit=_resolve_step_limit(args)
        )
        reports.append(report)
        line = (
            f"crosscheck p={report.p}: candidate solutions {report.candidate_count}, "
            f"variety solutions {report.variety_count}, equal={str(report.equal).lower()}"
        )
        print(line, file=out)
        for pt in report.extra_points:
            print("  extra point: " + ",".join(str(c) for c in pt), file=out)
    _write_json(
        args,
        {"verdict": verdict.to_json(), "crosschecks": [r.to_json() for r in reports]},
    )
    return 0 if verdict.holds else 2


def _cmd_points(args, out) -> int:
    field = _parse_field(args.field)
    order = _parse_order(args.order)
    config, params = _load_inputs(args)
    if args.candidates:
        gens = _load_candidates(args, config, params, field, order)
        ring = gens[0].ring
    else:
        gb = toric_ideal(config, field, order, step_limit=_resolve_step_limit(args))
        gens = list(gb.elements)
        ring = gb.ring
    pts = solution_set(gens, args.q, ring=ring, cap=args.enum_cap)
    report = pts.report()
    if report:
        print(report, file=out)
    print(f"# {len(pts)} points over F_{args.q}", file=out)
    _write_json(args, pts.to_json())
    return 0


def _cmd_witness(args, out) -> int:
    if not args.family:
        raise UsageError("witness reconstruction needs --family parameters")
    config, params = _load_inputs(args)
    try:
        coords = [int(c) for c in args.point.split(",")]
    except ValueError:
        raise UsageError(f"malformed point {args.point!r}") from None
    if len(coords) != config.ambient_dim:
        raise UsageError(f"point must have {config.ambient_dim} coordinates")
    result = reconstruct_witness(params, coords, args.q)
    if result.found:
        u = ",".join(str(c.residue) for c in result.point)
        print(f"witness: {u}", file=out)
        _write_json(args, {"found": True, "u": [c.residue for c in result.point], "reason": None})
        return 0
    print(f"absent: {result.reason}", file=out)
    _write_json(args, {"found": False, "u": None, "reason": result.reason})
    return 2


def _cmd_bounds(args, out) -> int:
    if not args.family:
        raise UsageError("bounds reporting needs --family parameters")
    _, params = _load_inputs(args)
    bounds = rank_bounds(params)
    print(f"N = {bounds.N}", file=out)
    print(f"codim = {bounds.codim}", file=out)
    print(f"lower = {bounds.lower} (cohomological bound; reported, not computed)", file=out)
    print(f"upper = {bounds.upper} (Eisenbud-Evans bound; reported, not computed)", file=out)
    print(f"ara = {bounds.ara_known if bounds.ara_known is not None else 'unknown'}", file=out)
    _write_json(args, bounds.to_json())
    return 0


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--family", help="family parameters, e.g. n=3,d=6,a=1,1")
    common.add_argument("--config", help="path to a point-configuration JSON file")
    common.add_argument("--field", default="Q", help="coefficient field: Q or Fp:<p> (default Q)")
    common.add_argument("--order", default="grevlex", help="monomial order: grevlex or lex")
    common.add_argument("--no-strict", action="store_true", help="accept d without two distinct prime divisors")
    common.add_argument("--step-limit", type=int, default=None, help="S-pair budget for Groebner computations")
    common.add_argument("--enum-cap", type=int, default=DEFAULT_ENUMERATION_CAP, help="max points to enumerate")
    common.add_argument("--json", help="also write machine-readable JSON to this path")

    parser = _Parser(prog="toric-stci", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("toric-ideal", parents=[common], help="print the reduced Groebner basis of the toric ideal")

    p_verify = sub.add_parser("verify", parents=[common], help="certify that candidates cut the variety out set-theoretically")
    p_verify.add_argument("--candidates", help="file with one candidate polynomial per line")
    p_verify.add_argument("--candidates-builtin", action="store_true", help="use the built-in candidates (n = 2 or 3)")
    p_verify.add_argument("--crosscheck", type=int, action="append", help="also compare F_p solution sets for this prime (repeatable)")

    p_points = sub.add_parser("points", parents=[common], help="enumerate the F_p solution set")
    p_points.add_argument("--q", type=int, required=True, help="prime p for the enumeration")
    p_points.add_argument("--candidates", help="enumerate these polynomials instead of the toric ideal")

    p_witness = sub.add_parser("witness", parents=[common], help="reconstruct a parameter point over F_p (n = 3)")
    p_witness.add_argument("--q", type=int, required=True, help="prime p")
    p_witness.add_argument("--point", required=True, help="comma-separated coordinates of the ambient point")

    sub.add_parser("bounds", parents=[common], help="report the known equation-count bounds")

    return parser


_COMMANDS = {
    "toric-ideal": _cmd_toric_ideal,
    "verify": _cmd_verify,
    "points": _cmd_points,
    "witness": _cmd_witness,
    "bounds": _cmd_bounds,
}


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (
        FamilyHypothesisError,
        CandidatesNotProvided,
        StepLimitExceeded,
        EnumerationCapExceeded,
        ParseError,
        ZeroDivisionError,
        ValueError,
        OSError,
        KeyError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
