"""Command-line driver.

Subcommands: solve, reduce, member, orbit, check.  Exit codes: 0 success,
1 negative answer (member), 2 usage or parse error, 3 budget exhausted
(solve still reports the partial basis).  Reports are deterministic: the
same input and options produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .buchberger import (
    BUDGET,
    EngineLimits,
    egb_buchberger,
    egb_incremental,
    is_egb,
    orbit_truncate,
)
from .poly import normal_form
from .problems import (
    ProblemSyntaxError,
    format_polynomial,
    parse,
    serialize,
)
from .signature import SignatureOptions, egb_signature

REPORT_FORMAT = "incgb-report-1"

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _load(path):
    try:
        with open(path) as handle:
            text = handle.read()
    except OSError as exc:
        raise SystemExit2(f"cannot read {path}: {exc}")
    try:
        return parse(text)
    except ProblemSyntaxError as exc:
        raise SystemExit2(f"{path}:{exc}")


class SystemExit2(Exception):
    """Usage or parse failure; maps to exit code 2."""


def _limits(problem, args):
    opts = problem.options
    max_width = getattr(args, "max_width", None)
    max_pairs = getattr(args, "max_pairs", None)
    return EngineLimits(
        max_width=max_width if max_width is not None else opts.get("max_width", 16),
        max_pairs=max_pairs if max_pairs is not None else opts.get("max_pairs", 100_000),
        max_basis=opts.get("max_basis"),
    )


def _parse_poly(problem, text):
    from .problems import _Parser

    sub = _Parser(text)
    expr = sub.parse_expression(problem.ring)
    if sub.peek()[0] != "eof":
        raise SystemExit2(f"trailing input in polynomial expression: {text!r}")
    return expr


def cmd_solve(args):
    problem = _load(args.file)
    algorithm = args.algorithm or problem.options.get("algorithm", "buchberger")
    limits = _limits(problem, args)
    if algorithm == "buchberger":
        result = egb_buchberger(problem.generators, limits)
    elif algorithm == "incremental":
        result = egb_incremental(problem.generators, limits)
    elif algorithm == "signature":
        opts = SignatureOptions(
            principal_syzygies=args.principal_syzygies
            or bool(problem.options.get("principal_syzygies", False))
        )
        result = egb_signature(problem.generators, opts, limits)
    else:
        raise SystemExit2(f"unknown algorithm {algorithm!r}")

    basis_lines = [format_polynomial(f) for f in result.basis]
    report = {
        "format": REPORT_FORMAT,
        "status": result.status,
        "algorithm": algorithm,
        "options": {
            "max_width": limits.max_width,
            "max_pairs": limits.max_pairs,
        },
        "basis": basis_lines,
        "stats": result.stats,
    }
    if args.json:
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        text = serialize(result.basis, problem.ring)
    sys.stdout.write(text)
    if args.report:
        with open(args.report, "w") as handle:
            json.dump(report, handle, indent=2, sort_keys=True)
            handle.write("\n")
    if result.status == BUDGET:
        print("budget exhausted; basis is partial", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def _solve_for_reduction(problem, args):
    limits = _limits(problem, args)
    result = egb_buchberger(problem.generators, limits)
    if result.status == BUDGET:
        raise SystemExit2("basis computation exhausted its budget")
    return result.basis


def cmd_reduce(args):
    problem = _load(args.file)
    target = _parse_poly(problem, args.poly)
    basis = _solve_for_reduction(problem, args)
    nf = normal_form(target, basis)
    print(format_polynomial(nf))
    return EXIT_OK


def cmd_member(args):
    problem = _load(args.file)
    target = _parse_poly(problem, args.poly)
    basis = _solve_for_reduction(problem, args)
    nf = normal_form(target, basis)
    return EXIT_OK if nf.is_zero else EXIT_NO


def cmd_orbit(args):
    problem = _load(args.file)
    try:
        shifted = orbit_truncate(problem.generators, args.width)
    except ValueError as exc:
        raise SystemExit2(str(exc))
    for f in shifted:
        print(format_polynomial(f))
    return EXIT_OK


def cmd_check(args):
    problem = _load(args.file)
    ok = is_egb(problem.generators, _limits(problem, args))
    print("EGB" if ok else "not an EGB")
    return EXIT_OK if ok else EXIT_NO


def build_parser():
    parser = argparse.ArgumentParser(
        prog="incgb", description="Equivariant Groebner basis calculator."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="compute an equivariant Groebner basis")
    solve.add_argument("file")
    solve.add_argument(
        "--algorithm", choices=["buchberger", "incremental", "signature"], default=None
    )
    solve.add_argument("--max-width", type=int, default=None)
    solve.add_argument("--max-pairs", type=int, default=None)
    solve.add_argument("--principal-syzygies", action="store_true")
    solve.add_argument("--report", metavar="FILE", default=None)
    solve.add_argument("--json", action="store_true")
    solve.set_defaults(func=cmd_solve)

    reduce_cmd = sub.add_parser("reduce", help="print the orbit normal form of a polynomial")
    reduce_cmd.add_argument("file")
    reduce_cmd.add_argument("--poly", required=True)
    reduce_cmd.add_argument("--max-width", type=int, default=None)
    reduce_cmd.add_argument("--max-pairs", type=int, default=None)
    reduce_cmd.set_defaults(func=cmd_reduce)

    member = sub.add_parser("member", help="test orbit ideal membership")
    member.add_argument("file")
    member.add_argument("--poly", required=True)
    member.add_argument("--max-width", type=int, default=None)
    member.add_argument("--max-pairs", type=int, default=None)
    member.set_defaults(func=cmd_member)

    orbit = sub.add_parser("orbit", help="print the generator truncation at a width")
    orbit.add_argument("file")
    orbit.add_argument("--width", type=int, required=True)
    orbit.set_defaults(func=cmd_orbit)

    check = sub.add_parser("check", help="test the generators with the Buchberger criterion")
    check.add_argument("file")
    check.add_argument("--max-width", type=int, default=None)
    check.add_argument("--max-pairs", type=int, default=None)
    check.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except SystemExit2 as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
