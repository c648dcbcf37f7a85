"""Command line front end.

Four subcommands: table emits the derived table as CSV or JSON, verify runs
the check suite and renders a report, series prints generating-function
coefficients plus identity outcomes, and oracle compares brute-force
involution counts against the companion sequence. Exit status is 0 on
success, 1 when a verification fails, 2 on usage errors.
"""

import argparse
import json
import os
import sys
from contextlib import contextmanager
from typing import Optional

from . import __version__
from .checks import run_all
from .involutions import ENUMERATION_MAX, count_involutions_enum
from .report import PASS, ReportDocument, VerifyConfig
from .sequences import a_seq, iter_rows
from .series import egf_F, series_identity_parts

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

# Everything stays exact at any size, but an unbounded --max is a footgun.
MAX_N_CEILING = 20000

CSV_HEADER = "n,a,x_num,x_den,d,e,q"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqlab",
        description="Exact computations and checks for x_{n+1} = 1 + n/x_n "
        "and its integer companion sequences.",
    )
    parser.add_argument("--version", action="version", version=f"seqlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="emit the derived table")
    p_table.add_argument("--max", type=int, default=20, help="largest index n (default 20)")
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.add_argument("--out", default=None, help="output file (default stdout)")

    p_verify = sub.add_parser("verify", help="run the check suite")
    p_verify.add_argument("--max", type=int, default=1000, help="largest index n (default 1000)")
    p_verify.add_argument("--primes", type=int, default=97, help="largest congruence prime (default 97)")
    p_verify.add_argument("--order", type=int, default=600, help="series truncation order (default 600)")
    p_verify.add_argument("--checks", default=None, help="comma-separated subset of check names")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--out", default=None, help="output file (default stdout)")
    p_verify.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker threads")
    p_verify.add_argument("--seed", type=int, default=0, help="seed for the sampled identity check")

    p_series = sub.add_parser("series", help="print coefficients and identity outcomes")
    p_series.add_argument("--order", type=int, default=12, help="truncation order (default 12)")
    p_series.add_argument("--out", default=None, help="output file (default stdout)")

    p_oracle = sub.add_parser("oracle", help="compare enumerated involution counts")
    p_oracle.add_argument("--max", type=int, default=10, help=f"largest n (at most {ENUMERATION_MAX})")
    p_oracle.add_argument("--out", default=None, help="output file (default stdout)")

    return parser


@contextmanager
def _open_out(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _usage_error(message: str) -> int:
    print(f"seqlab: {message}", file=sys.stderr)
    return EXIT_USAGE


def _check_max(value: int) -> Optional[int]:
    if value < 0:
        return _usage_error("--max must be nonnegative")
    if value > MAX_N_CEILING:
        return _usage_error(f"--max is capped at {MAX_N_CEILING}")
    return None


def cmd_table(args: argparse.Namespace) -> int:
    bad = _check_max(args.max)
    if bad is not None:
        return bad
    with _open_out(args.out) as fh:
        if args.format == "csv":
            fh.write(CSV_HEADER + "\n")
            for row in iter_rows(args.max):
                fh.write(
                    f"{row.n},{row.a},{row.x.numerator},{row.x.denominator},"
                    f"{row.d},{row.e},{row.q}\n"
                )
        else:
            # n and e stay small; everything else can outgrow doubles, so it
            # ships as exact decimal strings.
            fh.write("[\n")
            first = True
            for row in iter_rows(args.max):
                obj = {
                    "n": row.n,
                    "a": str(row.a),
                    "x_num": str(row.x.numerator),
                    "x_den": str(row.x.denominator),
                    "d": str(row.d),
                    "e": row.e,
                    "q": str(row.q),
                }
                if not first:
                    fh.write(",\n")
                fh.write("  " + json.dumps(obj))
                first = False
            fh.write("\n]\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    bad = _check_max(args.max)
    if bad is not None:
        return bad
    if args.order < 2:
        return _usage_error("--order must be at least 2")
    if args.jobs < 1:
        return _usage_error("--jobs must be positive")
    checks = None
    if args.checks is not None:
        checks = [name.strip() for name in args.checks.split(",") if name.strip()]
        if not checks:
            return _usage_error("--checks given but empty")
    config = VerifyConfig(
        max_n=args.max,
        prime_limit=args.primes,
        series_order=args.order,
        checks=checks,
        seed=args.seed,
    )
    try:
        results = run_all(config, jobs=args.jobs)
    except ValueError as exc:
        return _usage_error(str(exc))
    doc = ReportDocument(tool_version=__version__, config=config, results=results)
    with _open_out(args.out) as fh:
        fh.write(doc.to_json() if args.format == "json" else doc.to_text())
    return EXIT_OK if doc.aggregate == PASS else EXIT_FAIL


def cmd_series(args: argparse.Namespace) -> int:
    if args.order < 2:
        return _usage_error("--order must be at least 2")
    if args.order > MAX_N_CEILING:
        return _usage_error(f"--order is capped at {MAX_N_CEILING}")
    a_values = a_seq(args.order)
    f = egf_F(args.order, a_values)
    parts = series_identity_parts(args.order, a_values)
    with _open_out(args.out) as fh:
        for n in range(min(args.order, 10) + 1):
            fh.write(f"c[{n}] = {f.coeffs[n]}\n")
        for part in sorted(parts):
            idx = parts[part]
            if idx is None:
                fh.write(f"PASS {part}\n")
            else:
                fh.write(f"FAIL {part} (first discrepancy at index {idx})\n")
    return EXIT_OK if all(v is None for v in parts.values()) else EXIT_FAIL


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.max < 0:
        return _usage_error("--max must be nonnegative")
    if args.max > ENUMERATION_MAX:
        return _usage_error(f"--max is capped at {ENUMERATION_MAX} for exhaustive enumeration")
    a_values = a_seq(args.max)
    all_match = True
    with _open_out(args.out) as fh:
        for n in range(args.max + 1):
            count = count_involutions_enum(n)
            match = count == a_values[n]
            all_match = all_match and match
            fh.write(
                f"n={n} enumerated={count} companion={a_values[n]} "
                f"{'ok' if match else 'MISMATCH'}\n"
            )
    return EXIT_OK if all_match else EXIT_FAIL


_COMMANDS = {
    "table": cmd_table,
    "verify": cmd_verify,
    "series": cmd_series,
    "oracle": cmd_oracle,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    return _COMMANDS[args.command](args)


def run() -> None:
    sys.exit(main())
