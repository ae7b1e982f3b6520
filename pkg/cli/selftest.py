"""`selftest`: NNLS oracle equivalence and per-slot invariant suites."""

import argparse

from schemas.selftest import SelftestConfig, SelftestReport
from services.selftest import run_selftest

MAX_LISTED_FAILURES = 5


def register(subparsers: argparse._SubParsersAction) -> argparse.ArgumentParser:
    defaults = SelftestConfig()
    parser = subparsers.add_parser("selftest", help="check the solver and precoder against reference results")
    parser.add_argument("--problems", type=int, default=defaults.problems, help="random NNLS problems")
    parser.add_argument("--max-n", type=int, default=defaults.max_n, help="largest NNLS problem width")
    parser.add_argument("--slots", type=int, default=defaults.slots, help="slots per constellation")
    parser.add_argument("--tolerance", type=float, default=defaults.tolerance, help="pass/fail tolerance")
    parser.add_argument("--seed", type=int, default=defaults.seed)
    parser.add_argument("--ring-ratio", type=float, default=defaults.ring_ratio)
    parser.set_defaults(run=run)
    return parser


def print_report(report: SelftestReport) -> None:
    for suite in report.suites:
        status = "ok" if suite.passed else "FAIL"
        print(f"{suite.name:<28} {suite.cases:>6} cases  worst {suite.worst:.3e}  {status}")
        for failure in suite.failures[:MAX_LISTED_FAILURES]:
            print(f"    {failure}")
        if len(suite.failures) > MAX_LISTED_FAILURES:
            print(f"    ... {len(suite.failures) - MAX_LISTED_FAILURES} more")
    verdict = "PASSED" if report.passed else "FAILED"
    print(f"selftest {verdict} in {report.elapsed_s:.1f} s")


def run(args: argparse.Namespace) -> int:
    cfg = SelftestConfig(
        problems=args.problems,
        max_n=args.max_n,
        slots=args.slots,
        tolerance=args.tolerance,
        seed=args.seed,
        ring_ratio=args.ring_ratio,
    )
    report = run_selftest(cfg)
    print_report(report)
    return 0 if report.passed else 1
