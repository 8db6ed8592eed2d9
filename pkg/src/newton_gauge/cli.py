"""Command-line interface.

Three subcommands:

* analyze: parse a polynomial, run the criteria, print the report
  (add --verify to also run the factorization oracle).
* verify: analyze, factor with the oracle, and check the certificate.
* sweep: run a corpus or family sweep and summarize the outcome.

Exit codes: 0 success (a "none" certificate still counts), 2 bad input,
3 oracle out of budget when verification was requested, 4 verification
failure or sweep violations.  --json switches any subcommand from the
aligned text rendering to the JSON report; both come from the same
report dict.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .criteria import analyze
from .oracle import (
    OracleBudgetError,
    kronecker_factor,
    sweep,
    sweep_family,
    verify_certificate,
)
from .polynomial import AnalysisInput, InvalidInputError, ParseError, parse_polynomial
from .report import (
    analysis_report,
    render_analysis_text,
    render_sweep_text,
    sweep_report,
    verification_dict,
)

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_BUDGET = 3
EXIT_VIOLATION = 4


def _csv_ints(text: str, what: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise InvalidInputError(f"{what} must be a comma-separated list of integers: {text!r}")
    if not values:
        raise InvalidInputError(f"{what} must not be empty")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="newton-gauge",
        description="Polygon-based factor-degree certificates for integer"
        " polynomials under a p-adic valuation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze_p = sub.add_parser(
        "analyze", help="analyze one polynomial and print the certificate"
    )
    analyze_p.add_argument("--poly", required=True, help='polynomial in x, e.g. "x^6+2*x^3+8"')
    analyze_p.add_argument("--prime", required=True, type=int, help="prime defining the valuation")
    analyze_p.add_argument(
        "--verify", action="store_true", help="also factor with the oracle and verify"
    )
    analyze_p.add_argument("--json", action="store_true", help="emit the JSON report")

    verify_p = sub.add_parser(
        "verify", help="analyze, factor with the oracle, and check the certificate"
    )
    verify_p.add_argument("--poly", required=True)
    verify_p.add_argument("--prime", required=True, type=int)
    verify_p.add_argument("--json", action="store_true")

    sweep_p = sub.add_parser("sweep", help="run a corpus or family sweep")
    sweep_p.add_argument("--max-degree", type=int, default=4)
    sweep_p.add_argument("--min-degree", type=int, default=2)
    sweep_p.add_argument("--coeff-bound", type=int, default=3)
    sweep_p.add_argument("--primes", default="2,3", help="comma-separated primes")
    mode = sweep_p.add_mutually_exclusive_group()
    mode.add_argument(
        "--exhaustive", action="store_true",
        help="enumerate the whole corpus (the default)",
    )
    mode.add_argument("--sample", type=int, help="draw this many random polynomials")
    sweep_p.add_argument("--seed", type=int, default=0, help="seed for --sample")
    sweep_p.add_argument(
        "--family", choices=["example1", "example2"],
        help="sweep a built-in family instead of a coefficient corpus",
    )
    sweep_p.add_argument("--n", help="comma-separated n values for --family example1")
    sweep_p.add_argument("--d", help="comma-separated d values for --family example2")
    sweep_p.add_argument(
        "--no-verify", action="store_true",
        help="skip the factorization oracle (parameter checks only)",
    )
    sweep_p.add_argument("--json", action="store_true")
    return parser


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, sort_keys=True))
    elif report["kind"] == "analysis":
        print(render_analysis_text(report))
    else:
        print(render_sweep_text(report))


def _run_analysis(args: argparse.Namespace, with_verify: bool) -> int:
    poly = parse_polynomial(args.poly)
    inp = AnalysisInput(poly, args.prime)
    analysis = analyze(inp)
    verification: Optional[dict] = None
    failed = False
    if with_verify:
        if not analysis.certificate.applies:
            verification = {"skipped": "no certificate to verify"}
        else:
            witness = kronecker_factor(poly)
            outcome = verify_certificate(poly, args.prime, analysis.certificate, witness)
            verification = verification_dict(witness, outcome)
            failed = not outcome.passed
    _emit(analysis_report(analysis, verification), args.json)
    return EXIT_VIOLATION if failed else EXIT_OK


def _run_sweep(args: argparse.Namespace) -> int:
    primes = _csv_ints(args.primes, "--primes")
    for p in primes:
        # reuse input validation so "4 is not prime" style errors match
        AnalysisInput(parse_polynomial("x^2+1"), p)
    if args.family:
        if args.family == "example1":
            if not args.n:
                raise InvalidInputError("--family example1 requires --n")
            values = _csv_ints(args.n, "--n")
        else:
            if not args.d:
                raise InvalidInputError("--family example2 requires --d")
            values = _csv_ints(args.d, "--d")
        summary = sweep_family(
            args.family, values, primes, verify=not args.no_verify
        )
    else:
        summary = sweep(
            args.max_degree,
            args.coeff_bound,
            primes,
            min_degree=args.min_degree,
            sample=args.sample,
            seed=args.seed,
            verify=not args.no_verify,
        )
    _emit(sweep_report(summary), args.json)
    return EXIT_OK if summary.passed else EXIT_VIOLATION


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "analyze":
            return _run_analysis(args, with_verify=args.verify)
        if args.command == "verify":
            return _run_analysis(args, with_verify=True)
        return _run_sweep(args)
    except OracleBudgetError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, InvalidInputError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BAD_INPUT


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
