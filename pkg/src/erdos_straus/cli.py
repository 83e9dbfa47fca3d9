"""Command-line front end.

Exit codes: 0 success, 1 a structural check failed, 2 bad input, 3 no solution found.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from . import __version__
from .arith import MAX_SEARCH_P, MagnitudeError
from .io import dumps, figure2_csv, report_json, solution_obj, solutions_csv, solutions_json, solutions_jsonl
from .model import EquationError, NotPrimeError, OrderingError, SolutionError, make_solution, require_prime
from .oracle import ORACLE_CAP
from .structure import StructureViolation, verify_all
from .survey import DEFAULT_CHUNK, STRATEGIES, SurveyRecord, aggregate, figure2_dataset, iter_scan, solve_with

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_NO_SOLUTION = 3


class UsageError(Exception):
    pass


_VIOLATION_KIND = {NotPrimeError: "prime", OrderingError: "ordering", EquationError: "equation"}


def _err(msg: str) -> None:
    print(f"esc: error: {msg}", file=sys.stderr)


def _check_p(p: int, strategy: str, oracle_cap: int) -> None:
    if p >= MAX_SEARCH_P:
        raise UsageError(f"p={p} is too large (searches support p < 2^30)")
    try:
        require_prime(p)
    except SolutionError:
        raise UsageError(f"{p} is not prime") from None
    if strategy == "oracle" and p > oracle_cap:
        raise UsageError(f"oracle strategy is capped at p <= {oracle_cap} (use --oracle-cap)")


def cmd_solve(args: argparse.Namespace) -> int:
    p = args.p
    _check_p(p, args.strategy, args.oracle_cap)
    sols = solve_with(p, args.strategy, args.all)
    if args.all:
        sols = sorted(sols, key=lambda s: (s.x, s.y))
    if not sols:
        _err(f"no solution of 4/{p} = 1/x + 1/y + 1/z found with strategy {args.strategy}")
        return EXIT_NO_SOLUTION
    fmt = args.format
    if fmt == "table":
        for s in sols:
            o = solution_obj(s)
            print(f"{s.ascii()}    [Type {o['type']}, eq5 {'holds' if o['eq5'] else 'fails'}]")
    elif fmt == "csv":
        sys.stdout.write(solutions_csv(sols))
    elif fmt == "json":
        print(solutions_json(p, sols, args.strategy))
    else:
        sys.stdout.write(solutions_jsonl(sols))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        s = make_solution(args.p, args.x, args.y, args.z)
    except MagnitudeError as exc:
        raise UsageError(str(exc)) from None
    except SolutionError as exc:
        raise UsageError(f"{_VIOLATION_KIND.get(type(exc), 'input')} violation: {exc}") from None
    try:
        report = verify_all(s)
    except StructureViolation as exc:
        _err(str(exc))
        return EXIT_CHECK_FAILED
    if args.format == "json":
        print(report_json(report))
    else:
        print(s.ascii())
        for c in report.checks:
            status = "pass" if c.passed else "FAIL"
            witness = ", ".join(f"{k}={v}" for k, v in c.witness.items())
            print(f"  {c.name:<18} {status:<4}  {witness}")
        print("all checks pass" if report.all_passed else f"failed: {', '.join(report.failures())}")
    return EXIT_OK if report.all_passed else EXIT_CHECK_FAILED


def _render_aggregate(agg, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        print(dumps({"version": __version__, **agg.to_obj()}), file=out)
        return
    print(f"primes scanned : {agg.primes_scanned}", file=out)
    print(f"solutions      : {agg.solutions_total}", file=out)
    print(f"  Type I       : {agg.type1}", file=out)
    print(f"  Type II      : {agg.type2}", file=out)
    print(f"eq5 satisfied  : {agg.eq5_satisfied}", file=out)
    if agg.solutions_total:
        print(f"eq5 rate       : {agg.eq5_rate_text} = {agg.eq5_rate_decimal}", file=out)
    else:
        print("eq5 rate       : n/a", file=out)
    print(f"Type I eq5     : {agg.type1_eq5_satisfied}/{agg.type1}", file=out)
    print(f"failures       : {len(agg.failures)}" + (f" {list(agg.failures)}" if agg.failures else ""), file=out)
    if not agg.complete:
        print("note           : records are not complete enumerations; counts cover found solutions only", file=out)


def _check_range(lo: int, hi: int) -> None:
    if lo > hi:
        raise UsageError(f"invalid range: --from {lo} > --to {hi}")
    if hi >= MAX_SEARCH_P:
        raise UsageError(f"--to {hi} is too large (searches support p < 2^30)")


def cmd_scan(args: argparse.Namespace) -> int:
    _check_range(args.lo, args.hi)
    if args.strategy == "oracle" and args.hi > args.oracle_cap:
        raise UsageError(f"oracle strategy is capped at p <= {args.oracle_cap} (use --oracle-cap)")
    records = []
    out = open(args.out, "w", encoding="utf-8", newline="\n") if args.out else None
    try:
        for rec in iter_scan(
            args.lo,
            args.hi,
            args.strategy,
            args.all,
            jobs=args.jobs,
            chunk_size=args.chunk_size,
            timing=not args.no_timing,
            oracle_cap=args.oracle_cap,
        ):
            records.append(rec)
            if out:
                out.write(rec.to_json() + "\n")
    finally:
        if out:
            out.close()
    agg = aggregate(records)
    # keep stdout clean for piping when no --out is given
    _render_aggregate(agg, "table", out=sys.stdout if args.out else sys.stderr)
    if not args.out:
        for rec in records:
            print(rec.to_json())
    return EXIT_NO_SOLUTION if agg.failures else EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    records = []
    try:
        with open(args.input, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    records.append(SurveyRecord.from_json(line))
                except ValueError as exc:
                    raise UsageError(f"{args.input}: line {lineno}: {exc}") from None
    except OSError as exc:
        raise UsageError(str(exc)) from None
    _render_aggregate(aggregate(records), args.format)
    return EXIT_OK


def cmd_figure2(args: argparse.Namespace) -> int:
    _check_range(args.lo, args.hi)
    if args.hi > args.oracle_cap:
        raise UsageError(f"figure2 enumerates with the oracle, capped at p <= {args.oracle_cap}")
    text = figure2_csv(figure2_dataset(args.lo, args.hi, oracle_cap=args.oracle_cap))
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(str(exc)) from None
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _positive_int(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def _env_jobs() -> int:
    try:
        return max(1, int(os.environ.get("ESC_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="esc", description="Solve, verify and survey 4/p = 1/x + 1/y + 1/z for primes p."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_oracle_cap(sp):
        sp.add_argument("--oracle-cap", type=int, default=ORACLE_CAP,
                        help=f"largest p allowed for oracle enumeration (default {ORACLE_CAP})")

    def add_solve_args(sp, all_default=False):
        sp.add_argument("p", type=int)
        sp.add_argument("--strategy", choices=STRATEGIES, default="hybrid")
        if not all_default:
            sp.add_argument("--all", action="store_true", help="list every solution")
        sp.add_argument("--format", choices=("table", "csv", "json", "jsonl"), default="table")
        add_oracle_cap(sp)

    sp = sub.add_parser("solve", help="find a solution (or all with --all)")
    add_solve_args(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("enumerate", help="list every solution (alias of solve --all)")
    add_solve_args(sp, all_default=True)
    sp.set_defaults(func=cmd_solve, all=True)

    sp = sub.add_parser("verify", help="validate a triple and run every structural check")
    for name in ("p", "x", "y", "z"):
        sp.add_argument(name, type=int)
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("scan", help="survey a range of primes, writing JSONL records")
    sp.add_argument("--from", dest="lo", type=int, required=True)
    sp.add_argument("--to", dest="hi", type=int, required=True)
    sp.add_argument("--strategy", choices=STRATEGIES, default="hybrid")
    sp.add_argument("--all", action="store_true", help="record every solution, not just the first")
    sp.add_argument("--jobs", type=_positive_int, default=_env_jobs())
    sp.add_argument("--chunk-size", type=_positive_int, default=DEFAULT_CHUNK)
    sp.add_argument("--out", help="JSONL output path (default: stdout)")
    sp.add_argument("--no-timing", action="store_true", help="write elapsed_ns as null")
    add_oracle_cap(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("stats", help="aggregate a JSONL scan file")
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("figure2", help="CSV of (p, y, p mod 4) for every Type I solution")
    sp.add_argument("--from", dest="lo", type=int, required=True)
    sp.add_argument("--to", dest="hi", type=int, required=True)
    sp.add_argument("--out")
    add_oracle_cap(sp)
    sp.set_defaults(func=cmd_figure2)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        _err(str(exc))
        return EXIT_USAGE
    except (ValueError, MagnitudeError) as exc:
        _err(str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
