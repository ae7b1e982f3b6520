"""`bench`: Monte Carlo ZF vs SLP power and timing sweep."""

import argparse
import logging
from pathlib import Path

from cli.options import add_scenario_arguments, parse_nt
from core.config import settings
from schemas.trial import BenchReport, TrialConfig
from services.report import emit_report
from services.sim import run_benchmark

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> argparse.ArgumentParser:
    parser = subparsers.add_parser("bench", help="average transmit power and solve time over an N_t sweep")
    add_scenario_arguments(parser, n_r=10, seed=1)
    parser.add_argument("--nt", type=parse_nt, default=[10, 12, 14, 16], help="N_t sweep (default 10:16:2)")
    parser.add_argument("--trials", type=int, default=1000, help="trials per N_t (default 1000)")
    parser.add_argument("--noise-var", type=float, default=0.0, help="AWGN variance; > 0 adds SER columns")
    parser.add_argument("--out", type=Path, default=None, help=f"report directory (default {settings.output_dir})")
    parser.add_argument("--workers", type=int, default=None, help="worker processes (default SLP_WORKERS)")
    parser.set_defaults(run=run)
    return parser


def build_config(args: argparse.Namespace) -> TrialConfig:
    """Raises pydantic.ValidationError on inconsistent flags."""
    return TrialConfig(
        n_r=args.nr,
        n_t_values=args.nt,
        constellation=args.mod,
        gamma_db=args.gamma_db,
        trials=args.trials,
        noise_var=args.noise_var,
        master_seed=args.seed,
        ring_ratio=args.ring_ratio,
        workers=args.workers if args.workers is not None else settings.workers,
    )


def print_summary(report: BenchReport) -> None:
    noisy = report.config.noise_var > 0
    header = f"{'nt':>4} {'gain_db':>9} {'median_us':>11} {'corr_rate':>10} {'discarded':>10}"
    if noisy:
        header += f" {'ser_zf':>10} {'ser_slp':>10}"
    print(header)
    for s in report.summaries:
        line = (
            f"{s.nt:>4} {s.gain_db:>9.3f} {s.median_time_ns / 1e3:>11.1f} "
            f"{s.correction_rate:>10.3f} {s.discarded_trials:>10}"
        )
        if noisy:
            line += f" {s.ser_zf:>10.3e} {s.ser_slp:>10.3e}"
        print(line)


def run(args: argparse.Namespace) -> int:
    cfg = build_config(args)
    report = run_benchmark(cfg)
    print_summary(report)

    out = args.out if args.out is not None else Path(settings.output_dir)
    written = emit_report(report, out)
    print(f"wrote {len(written)} files to {out}")
    return 0
