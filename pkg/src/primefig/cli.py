"""Command-line front end.

Exit codes: 0 success, 1 counterexample found, 2 usage error, 3 overflow.
"""

from __future__ import annotations

import argparse
import contextlib
import math
import sys
import time
from fractions import Fraction

from .bounds import bound_report, count_subfigures_rect, verify_lemma1, verify_lemma2, verify_theorem
from ._util import dumps
from .diagram import Partition, from_diagram, to_diagram
from .errors import DomainError, IntegerOverflow
from .primes import factorize, prime_count
from .render import FORMATS, RenderSpec, render

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_OVERFLOW = 0, 1, 2, 3


def natural(text: str) -> int:
    text = text.strip()
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}")
    return int(text)


def positive(text: str) -> int:
    n = natural(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a natural number >= 1, got {text!r}")
    return n


def real(text: str) -> Fraction:
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a decimal number, got {text!r}") from None
    return value


def row_list(text: str) -> list[int]:
    parts = [p for p in text.replace(" ", "").split(",") if p]
    rows = []
    for p in parts:
        if not p.isdigit():
            raise argparse.ArgumentTypeError(f"row lengths must be naturals, got {p!r}")
        rows.append(int(p))
    return rows


def format_table(n_max: int) -> str:
    pad = len(str(n_max))
    blocks = []
    for n in range(1, n_max + 1):
        lines = [f"{n:>{pad}}  {factorize(n).notation()}"]
        art = render(to_diagram(n)).splitlines() or ["(empty)"]
        lines.extend(" " * (pad + 2) + line for line in art)
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primefig",
        description="Ferrers diagrams of the naturals and a prime-counting lower bound.",
    )
    parser.add_argument("-o", "--output", help="write results here instead of standard output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diagram", help="draw the figure of n")
    p.add_argument("n", type=positive)
    p.add_argument("--format", choices=FORMATS, default="ascii")
    p.add_argument("--cell-size", type=float, default=10.0)

    p = sub.add_parser("number", help="decode a figure given as comma-separated row lengths")
    p.add_argument("rows", nargs="?", default="", type=row_list)
    p.add_argument("--max-bits", type=natural, default=128,
                   help="overflow limit for the result in bits; 0 disables (default 128)")

    p = sub.add_parser("factor", help="factorization of n in prime-index notation")
    p.add_argument("n", type=positive)

    p = sub.add_parser("pi", help="number of primes <= x")
    p.add_argument("x", type=real)

    p = sub.add_parser("bound", help="lower bound on pi(x) with every chain value")
    p.add_argument("x", type=real)

    p = sub.add_parser("table", help="n, factorization and figure for n = 1..n_max")
    p.add_argument("n_max", type=positive)

    p = sub.add_parser("count-subfigures", help="number of subfigures of an i x j rectangle")
    p.add_argument("i", type=natural)
    p.add_argument("j", type=natural)

    p = sub.add_parser("verify", help="run a brute-force sweep")
    claims = p.add_subparsers(dest="claim", required=True)
    c = claims.add_parser("lemma1", help="nested figures decode to ordered integers")
    c.add_argument("--max", dest="n_max", type=positive, required=True)
    c.add_argument("--jobs", type=positive, default=1)
    c = claims.add_parser("lemma2", help="rectangle subfigure counts are binomials")
    c.add_argument("--imax", type=natural, required=True)
    c.add_argument("--jmax", type=natural, required=True)
    c = claims.add_parser("theorem", help="the pi(x) lower bound and its proof chain")
    c.add_argument("--xmax", type=natural, required=True)
    c.add_argument("--csv", metavar="PATH", help="stream one row per x to this file")
    c.add_argument("--jobs", type=positive, default=1)
    return parser


def _verify(args, parser) -> tuple[str, int]:
    started = time.perf_counter()
    if args.claim == "lemma1":
        report = verify_lemma1(args.n_max, jobs=args.jobs)
    elif args.claim == "lemma2":
        report = verify_lemma2(args.imax, args.jmax)
    else:
        if args.xmax < 2:
            parser.error("--xmax must be >= 2")
        with contextlib.ExitStack() as stack:
            csv_file = None
            if args.csv:
                csv_file = stack.enter_context(open(args.csv, "w", newline=""))
            report = verify_theorem(args.xmax, jobs=args.jobs, csv_file=csv_file)
    elapsed = time.perf_counter() - started
    print(f"{args.claim}: {report.cases_checked} cases, "
          f"{len(report.counterexamples)} counterexamples, {elapsed:.2f}s", file=sys.stderr)
    return dumps(report, indent=2) + "\n", EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


def run(args, parser) -> tuple[str, int]:
    cmd = args.command
    if cmd == "diagram":
        try:
            spec = RenderSpec(format=args.format, cell_size=args.cell_size)
        except ValueError as exc:
            parser.error(str(exc))
        return render(to_diagram(args.n), spec), EXIT_OK
    if cmd == "number":
        if any(r == 0 for r in args.rows):
            parser.error("row lengths must be >= 1")
        try:
            n = from_diagram(Partition.canonical(args.rows), max_bits=args.max_bits or None)
        except IntegerOverflow as exc:
            print(f"primefig: {exc}", file=sys.stderr)
            return "", EXIT_OVERFLOW
        return dumps(n) + "\n", EXIT_OK
    if cmd == "factor":
        return factorize(args.n).notation() + "\n", EXIT_OK
    if cmd == "pi":
        if args.x < 0:
            parser.error("x must be >= 0")
        return f"{prime_count(args.x)}\n", EXIT_OK
    if cmd == "bound":
        x = args.x.numerator if args.x.denominator == 1 else args.x
        try:
            report = bound_report(x)
        except DomainError as exc:
            parser.error(str(exc))
        return dumps(report, indent=2) + "\n", EXIT_OK
    if cmd == "table":
        return format_table(args.n_max), EXIT_OK
    if cmd == "count-subfigures":
        return f"{count_subfigures_rect((args.i, args.j))}\n", EXIT_OK
    return _verify(args, parser)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    text, code = run(args, parser)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
