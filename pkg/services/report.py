"""CSV, plot-data and PDF output for a benchmark report."""

import csv
import logging
import math
from pathlib import Path

from schemas.trial import BenchReport, NtSummary
from services.report_pdf import generate_bench_pdf

logger = logging.getLogger(__name__)

TRIAL_COLUMNS = ["nt", "trial", "power_zf", "power_slp", "solve_time_ns", "corrections", "discarded"]
SUMMARY_COLUMNS = ["nt", "gain_db", "mean_time_ns", "median_time_ns", "p95_time_ns", "correction_rate"]
TIMING_COLUMNS = {"solve_time_ns"}


def _db(value: float) -> float:
    return 10.0 * math.log10(value)


PLOT_METRICS = {
    "power_zf_db": lambda s: _db(s.mean_power_zf),
    "power_slp_db": lambda s: _db(s.mean_power_slp),
    "gain_db": lambda s: s.gain_db,
    "median_time_ns": lambda s: s.median_time_ns,
    "correction_rate": lambda s: s.correction_rate,
}


def _write_csv(path: Path, columns: list[str], rows: list[dict]) -> Path:
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.DictWriter(handle, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({key: row[key] for key in columns})
    return path


def _write_plot_data(path: Path, metric: str, summaries: list[NtSummary]) -> Path:
    extract = PLOT_METRICS[metric]
    lines = [f"# nt {metric}"]
    lines += [f"{s.nt} {extract(s)!r}" for s in summaries]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def emit_report(report: BenchReport, path: str | Path) -> list[Path]:
    """
    Write trials.csv, summary.csv, one `<metric>.dat` per plotted metric,
    detection.csv when the run had noise, and report.pdf. Returns the paths.
    """
    out = Path(path)
    out.mkdir(parents=True, exist_ok=True)

    trial_rows = [
        {**r.model_dump(), "discarded": int(r.discarded)}
        for r in report.records
    ]
    written = [
        _write_csv(out / "trials.csv", TRIAL_COLUMNS, trial_rows),
        _write_csv(out / "summary.csv", SUMMARY_COLUMNS, [s.model_dump() for s in report.summaries]),
    ]
    written += [_write_plot_data(out / f"{metric}.dat", metric, report.summaries) for metric in PLOT_METRICS]

    if report.config.noise_var > 0:
        written.append(
            _write_csv(out / "detection.csv", ["nt", "ser_zf", "ser_slp"], [s.model_dump() for s in report.summaries])
        )

    pdf_path = out / "report.pdf"
    pdf_path.write_bytes(generate_bench_pdf(report))
    written.append(pdf_path)

    logger.info("wrote %d report files to %s", len(written), out)
    return written
