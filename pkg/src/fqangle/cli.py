"""Command-line interface.

Subcommands: angle, decode, verify, bench, mindist.  In json mode (the
default) a single document is written to stdout and diagnostics go to
stderr; json keys are stable API, plain mode is for humans.

Exit codes: 0 success, 1 usage or input error, 2 verification failure or
enumeration/suite guard violation, 3 decode landed beyond the unique
decoding radius.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .angle import argmin_scalar, is_max_angle
from .codes import (
    LinearCode,
    angular_decode,
    make_code,
    make_repetition_code,
    make_rs_code,
    min_distance,
    projective_list_decode,
)
from .errors import EnumerationTooLarge, FqAngleError, SuiteTooLarge
from .experiments import (
    angle_vs_dist_census,
    bench_angle,
    verify_angular_decoding,
    verify_metric_axioms,
    verify_oracle_equivalence,
    verify_projective_descent,
)
from .gf import Field, field_from_order, make_field
from .vectors import format_vector, hamming_distance, parse_vector, scalar_mul

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_BEYOND_RADIUS = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we want exit 1
        raise UsageError(message)


def _add_field_args(p: argparse.ArgumentParser):
    p.add_argument("--q", type=int, help="field order, a prime power <= 65536")
    p.add_argument("--p", type=int, help="field characteristic (alternative to --q)")
    p.add_argument("--m", type=int, default=1, help="extension degree (with --p)")


def _add_code_args(p: argparse.ArgumentParser):
    p.add_argument("--code", choices=["rs", "rep", "file"], default="rs")
    p.add_argument("--code-file", type=Path, help="generator matrix, one row per line")
    p.add_argument("--n", type=int, help="code length")
    p.add_argument("--k", type=int, help="code dimension (rs)")


def build_parser() -> _Parser:
    parser = _Parser(prog="fqangle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("angle", help="angle between two nonzero vectors")
    _add_field_args(pa)
    pa.add_argument("--u", required=True, help="comma-separated encodings")
    pa.add_argument("--v", required=True)
    pa.add_argument("--verbose", action="store_true", help="trace every scalar's distance")
    pa.add_argument("--format", choices=["json", "plain"], default="json")

    pd = sub.add_parser("decode", help="angular decoding of a received word")
    _add_field_args(pd)
    _add_code_args(pd)
    pd.add_argument("--u", required=True)
    pd.add_argument("--rho", type=int, help="list decode within angle < rho instead")
    pd.add_argument("--format", choices=["json", "plain"], default="json")

    pv = sub.add_parser("verify", help="run a verification suite")
    _add_field_args(pv)
    _add_code_args(pv)
    pv.add_argument(
        "--suite",
        required=True,
        help="one of: metric, projective, oracle, decoding, census",
    )
    pv.add_argument("--trials", type=int, default=10000)
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--format", choices=["json", "plain"], default="json")

    pb = sub.add_parser("bench", help="time the fast and naive algorithms")
    _add_field_args(pb)
    pb.add_argument("--n", required=True, help="length, or comma-separated lengths")
    pb.add_argument("--reps", type=int, default=9)
    pb.add_argument("--format", choices=["json", "plain"], default="json")

    pm = sub.add_parser("mindist", help="brute-force minimum distance")
    _add_field_args(pm)
    _add_code_args(pm)
    pm.add_argument("--format", choices=["json", "plain"], default="json")

    return parser


def _field_from_args(args) -> Field:
    if args.q is not None:
        if args.p is not None:
            raise UsageError("give either --q or --p/--m, not both")
        return field_from_order(args.q)
    if args.p is not None:
        return make_field(args.p, args.m)
    raise UsageError("a field is required: --q or --p (with optional --m)")


def _code_from_args(field: Field, args) -> LinearCode:
    if args.code == "rs":
        if args.n is None or args.k is None:
            raise UsageError("--code rs requires --n and --k")
        return make_rs_code(field, args.n, args.k)
    if args.code == "rep":
        if args.n is None:
            raise UsageError("--code rep requires --n")
        return make_repetition_code(field, args.n)
    if args.code_file is None:
        raise UsageError("--code file requires --code-file")
    rows = []
    for line in args.code_file.read_text().splitlines():
        line = line.strip()
        if line:
            rows.append(parse_vector(field, line))
    return make_code(field, rows)


# ----------------------------------------------------------------------
# Subcommands: each returns (document, exit_code)
# ----------------------------------------------------------------------

def cmd_angle(args) -> tuple[dict, int]:
    field = _field_from_args(args)
    u = parse_vector(field, args.u)
    v = parse_vector(field, args.v)
    c_star, a = argmin_scalar(u, v)
    doc = {
        "angle": a,
        "argmin_c": c_star,
        "is_max": is_max_angle(u, v),
    }
    if args.verbose:
        doc["trace"] = [
            {"c": c, "distance": hamming_distance(u, scalar_mul(c, v))}
            for c in field.nonzero_elements()
        ]
    return doc, EXIT_OK


def cmd_decode(args) -> tuple[dict, int]:
    field = _field_from_args(args)
    code = _code_from_args(field, args)
    u = parse_vector(field, args.u)
    if args.rho is not None:
        hits = projective_list_decode(u, code, args.rho)
        doc = {
            "rho": args.rho,
            "list": [{"point": format_vector(pt.rep), "angle": a} for pt, a in hits],
            "list_size": len(hits),
            "min_distance": min_distance(code),
        }
        return doc, EXIT_OK
    outcome = angular_decode(u, code)
    doc = {
        "kind": outcome.kind.value,
        "best": [{"point": format_vector(pt.rep), "angle": a} for pt, a in outcome.best],
        "min_distance": outcome.min_distance,
        "radius_bound": outcome.radius_bound,
        "within_radius": outcome.unique,
    }
    return doc, EXIT_OK if outcome.unique else EXIT_BEYOND_RADIUS


def cmd_verify(args) -> tuple[dict, int]:
    field = _field_from_args(args)
    suite = args.suite
    if suite == "metric":
        if args.n is None:
            raise UsageError("--suite metric requires --n")
        report = verify_metric_axioms(field, args.n)
    elif suite == "projective":
        if args.n is None:
            raise UsageError("--suite projective requires --n")
        report = verify_projective_descent(field, args.n)
    elif suite == "oracle":
        if args.n is None:
            raise UsageError("--suite oracle requires --n")
        report = verify_oracle_equivalence(field, args.n, args.trials, args.seed)
    elif suite == "decoding":
        report = verify_angular_decoding(_code_from_args(field, args), args.seed)
    elif suite == "census":
        report = angle_vs_dist_census(_code_from_args(field, args), args.trials, args.seed)
    else:
        raise UsageError(f"unknown suite {suite!r}")
    return report.to_dict(), EXIT_OK if report.passed else EXIT_VERIFY


def cmd_bench(args) -> tuple[dict, int]:
    field = _field_from_args(args)
    try:
        n_values = [int(s) for s in args.n.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse --n {args.n!r}") from None
    records = bench_angle(field, n_values, args.reps)
    return {"records": [r.to_dict() for r in records]}, EXIT_OK


def cmd_mindist(args) -> tuple[dict, int]:
    field = _field_from_args(args)
    code = _code_from_args(field, args)
    d = min_distance(code)
    doc = {
        "min_distance": d,
        "q": field.q,
        "n": code.n,
        "k": code.k,
        "singleton_bound": code.n - code.k + 1,
        "is_mds": d == code.n - code.k + 1,
    }
    if args.code == "rs" and not doc["is_mds"]:
        return doc, EXIT_VERIFY  # an RS code must meet the Singleton bound
    return doc, EXIT_OK


# ----------------------------------------------------------------------
# Rendering and entry point
# ----------------------------------------------------------------------

def _render_plain(doc: dict, out):
    for key, value in doc.items():
        if isinstance(value, list):
            print(f"{key}:", file=out)
            for item in value:
                print(f"  {item}", file=out)
        else:
            print(f"{key}: {value}", file=out)


_COMMANDS = {
    "angle": cmd_angle,
    "decode": cmd_decode,
    "verify": cmd_verify,
    "bench": cmd_bench,
    "mindist": cmd_mindist,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        doc, code = _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EnumerationTooLarge, SuiteTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (FqAngleError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(json.dumps(doc))
    else:
        _render_plain(doc, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
