"""Command-line front end.

Subcommands: ``eval`` (evaluate an expression to a truncated series),
``qmul`` (twisted product of two expressions), ``solve`` (fixed-point
equation f(q)F(q^m) = F(q), by product, digit formula, or both),
``limit`` (limit of a built-in family over chosen primes), and ``digits``
(base-m digit counts).  Results go to stdout, diagnostics to stderr;
exit code 0 on success, 1 on a domain error, 2 on a usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .errors import ExponentTooLarge, ExpressionSyntaxError, QSeriesError
from .expressions import parse_polynomial
from .quantum import QuantumSequence, quantum_integer, quantum_limit, qmul
from .series import (
    Polynomial,
    TruncatedSeries,
    format_coefficient,
    format_polynomial,
    format_series,
    invert,
    truncate,
)
from .solver import madic_digits, solve_digits, solve_product, verify_solution


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError("value must be at least 1")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError("value must be nonnegative")
    return value


def _prime_list(text: str) -> list[int]:
    try:
        primes = [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a comma-separated list of integers"
        )
    if not primes:
        raise argparse.ArgumentTypeError("at least one prime is required")
    return primes


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qseries",
        description="Exact power-series arithmetic in q over the rationals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an expression mod q^N")
    p_eval.add_argument("expr", help="expression, e.g. '(1+q)*(1+q^2)'")
    p_eval.add_argument("--prec", type=_positive_int, required=True)
    p_eval.add_argument("--invert", action="store_true",
                        help="invert the value (its constant term must be nonzero)")
    p_eval.add_argument("--json", action="store_true")

    p_qmul = sub.add_parser("qmul", help="twisted product f(q)*g(q^m)")
    p_qmul.add_argument("--f", required=True)
    p_qmul.add_argument("--g", required=True)
    p_qmul.add_argument("--m", type=_positive_int, required=True)
    p_qmul.add_argument("--json", action="store_true")

    p_solve = sub.add_parser("solve", help="solve f(q)*F(q^m) = F(q) for F")
    p_solve.add_argument("--f", required=True)
    p_solve.add_argument("--m", type=_positive_int, required=True)
    p_solve.add_argument("--prec", type=_positive_int, required=True)
    p_solve.add_argument("--method", choices=("product", "digits", "both"),
                         default="both")
    p_solve.add_argument("--json", action="store_true")

    p_limit = sub.add_parser("limit", help="limit of a built-in family")
    p_limit.add_argument("--family", choices=("qint", "ones"), required=True)
    p_limit.add_argument("--primes", type=_prime_list, required=True,
                         help="comma-separated primes, e.g. 2,3")
    p_limit.add_argument("--prec", type=_positive_int, required=True)
    p_limit.add_argument("--json", action="store_true")

    p_digits = sub.add_parser("digits", help="digit-value counts in base m")
    p_digits.add_argument("k", type=_nonnegative_int)
    p_digits.add_argument("--base", type=_positive_int, required=True)
    p_digits.add_argument("--json", action="store_true")

    return parser


def _series_json(s: TruncatedSeries) -> str:
    return json.dumps(
        {"precision": s.precision, "coeffs": [format_coefficient(c) for c in s.coeffs]}
    )


def _polynomial_json(p: Polynomial) -> str:
    return json.dumps(
        {"precision": None, "coeffs": [format_coefficient(c) for c in p.coeffs]}
    )


def _cmd_eval(args) -> int:
    value = truncate(parse_polynomial(args.expr), args.prec)
    if args.invert:
        value = invert(value)
    print(_series_json(value) if args.json else format_series(value))
    return 0


def _cmd_qmul(args) -> int:
    f = parse_polynomial(args.f)
    g = parse_polynomial(args.g)
    result = qmul(f, g, args.m)
    print(_polynomial_json(result) if args.json else format_polynomial(result))
    return 0


def _cmd_solve(args) -> int:
    f = parse_polynomial(args.f)
    if args.method == "product":
        result = solve_product(f, args.m, args.prec)
        print(_series_json(result) if args.json else format_series(result))
        return 0
    if args.method == "digits":
        result = solve_digits(f, args.m, args.prec)
        print(_series_json(result) if args.json else format_series(result))
        return 0
    by_product = solve_product(f, args.m, args.prec)
    by_digits = solve_digits(f, args.m, args.prec)
    agree = by_product == by_digits and verify_solution(f, args.m, by_product, args.prec)
    if args.json:
        print(json.dumps({
            "precision": args.prec,
            "product": [format_coefficient(c) for c in by_product.coeffs],
            "digits": [format_coefficient(c) for c in by_digits.coeffs],
            "agree": agree,
        }))
    else:
        print(f"product: {format_series(by_product)}")
        print(f"digits: {format_series(by_digits)}")
        print("AGREE" if agree else "DISAGREE")
    return 0 if agree else 1


def _cmd_limit(args) -> int:
    if args.family == "qint":
        seeds = {p: quantum_integer(p) for p in args.primes}
    else:
        seeds = {p: Polynomial((1,)) for p in args.primes}
    seq = QuantumSequence(seeds)
    result = quantum_limit(seq, args.prec)
    print(_series_json(result) if args.json else format_series(result))
    return 0


def _cmd_digits(args) -> int:
    profile = madic_digits(args.k, args.base)
    if args.json:
        print(json.dumps({
            "k": profile.k,
            "base": profile.base,
            "counts": list(profile.counts),
        }))
    else:
        print(" ".join(
            f"d_{i}={c}" for i, c in enumerate(profile.counts, start=1)
        ))
    return 0


_HANDLERS = {
    "eval": _cmd_eval,
    "qmul": _cmd_qmul,
    "solve": _cmd_solve,
    "limit": _cmd_limit,
    "digits": _cmd_digits,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Execute one subcommand; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _HANDLERS[args.command](args)
    except (ExpressionSyntaxError, ExponentTooLarge) as exc:
        print(f"qseries: {exc}", file=sys.stderr)
        return 2
    except (QSeriesError, ValueError) as exc:
        print(f"qseries: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
