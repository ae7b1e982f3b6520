"""
Monte Carlo benchmark: paired ZF / SLP trials over an N_t sweep.

Every random draw is seeded from (master_seed, n_t, trial, stream, attempt),
so results do not depend on how trials are split across workers.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from enum import IntEnum

import numpy as np

from core.config import settings
from core.errors import BenchmarkError, NnlsConvergenceError, SingularChannelError
from models.constellation import Constellation
from models.enums import Precoder
from schemas.trial import BenchReport, NtSummary, TrialConfig, TrialRecord
from services.channel import apply_channel, draw_channel, zf_power, zf_precoder, zf_transmit
from services.constellation import detect, draw_symbols, make_constellation
from services.nnls import NnlsSolver
from services.slp import precode_slot

logger = logging.getLogger(__name__)

MAX_DISCARD_RATE = 0.01


class Stream(IntEnum):
    CHANNEL = 0
    SYMBOLS = 1
    NOISE = 2


def trial_seed(master_seed: int, nt: int, trial: int, stream: Stream, attempt: int = 0) -> int:
    """Counter-based seed split."""
    seq = np.random.SeedSequence([master_seed, nt, trial, int(stream), attempt])
    return int(seq.generate_state(1, dtype=np.uint64)[0])


def _symbol_errors(c: Constellation, y: np.ndarray, gamma: np.ndarray, truth: np.ndarray) -> int:
    return int(np.count_nonzero(detect(c, y / gamma) != truth))


def run_trial(cfg: TrialConfig, c: Constellation, nt: int, trial: int, solver: NnlsSolver) -> TrialRecord:
    """One paired ZF/SLP trial; singular channels are redrawn, failures discarded."""
    gamma = cfg.gamma_amplitude
    redraws = 0
    for attempt in range(settings.max_channel_redraws + 1):
        h = draw_channel(cfg.n_r, nt, trial_seed(cfg.master_seed, nt, trial, Stream.CHANNEL, attempt))
        try:
            w = zf_precoder(h)
            break
        except SingularChannelError as exc:
            redraws += 1
            logger.warning("nt=%d trial=%d: %s, redrawing", nt, trial, exc)
    else:
        logger.warning("nt=%d trial=%d discarded after %d singular draws", nt, trial, redraws)
        return TrialRecord(nt=nt, trial=trial, discarded=True, redraws=redraws)

    s = draw_symbols(c, cfg.n_r, trial_seed(cfg.master_seed, nt, trial, Stream.SYMBOLS))
    power_zf = zf_power(w, s, gamma)
    try:
        result = precode_slot(h, w, s, c, gamma, solver=solver)
    except NnlsConvergenceError as exc:
        logger.warning("nt=%d trial=%d discarded: %s", nt, trial, exc)
        return TrialRecord(nt=nt, trial=trial, power_zf=power_zf, discarded=True, redraws=redraws)

    errors_zf = errors_slp = 0
    if cfg.noise_var > 0:
        noise_seed = trial_seed(cfg.master_seed, nt, trial, Stream.NOISE)
        y_zf = apply_channel(h, zf_transmit(w, s, gamma), cfg.noise_var, noise_seed)
        y_slp = apply_channel(h, result.x, cfg.noise_var, noise_seed)
        errors_zf = _symbol_errors(c, y_zf, gamma, s.source_indices)
        errors_slp = _symbol_errors(c, y_slp, gamma, s.source_indices)

    return TrialRecord(
        nt=nt,
        trial=trial,
        power_zf=power_zf,
        power_slp=result.total_power,
        solve_time_ns=result.solve_time_ns,
        correction_time_ns=result.correction_time_ns,
        corrections=result.corrected_users,
        redraws=redraws,
        symbols=len(s),
        errors_zf=errors_zf,
        errors_slp=errors_slp,
    )


def _warmup_trials(cfg: TrialConfig) -> int:
    return settings.warmup_trials if cfg.warmup_trials is None else cfg.warmup_trials


def _run_chunk(cfg: TrialConfig, nt: int, start: int, stop: int) -> list[TrialRecord]:
    """Trials [start, stop) in one process; the first few of every chunk run cold."""
    c = make_constellation(cfg.constellation, cfg.ring_ratio)
    solver = NnlsSolver(tolerance=cfg.nnls_tolerance, max_iter=cfg.nnls_max_iter)
    cold = start + _warmup_trials(cfg)
    rows = [run_trial(cfg, c, nt, trial, solver) for trial in range(start, stop)]
    return [r.model_copy(update={"warmup": True}) if r.trial < cold else r for r in rows]


def _chunks(trials: int, workers: int) -> list[tuple[int, int]]:
    size = math.ceil(trials / workers)
    return [(start, min(start + size, trials)) for start in range(0, trials, size)]


def collect_trials(cfg: TrialConfig) -> dict[int, list[TrialRecord]]:
    """Run every trial, ordered by trial index per n_t regardless of completion order."""
    records: dict[int, list[TrialRecord]] = {}
    if cfg.workers == 1:
        for nt in cfg.n_t_values:
            records[nt] = _run_chunk(cfg, nt, 0, cfg.trials)
            logger.info("nt=%d: %d trials done", nt, cfg.trials)
        return records

    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        futures = {
            nt: [pool.submit(_run_chunk, cfg, nt, start, stop) for start, stop in _chunks(cfg.trials, cfg.workers)]
            for nt in cfg.n_t_values
        }
        for nt, parts in futures.items():
            rows = [row for part in parts for row in part.result()]
            records[nt] = sorted(rows, key=lambda r: r.trial)
            logger.info("nt=%d: %d trials done", nt, cfg.trials)
    return records


def summarize(cfg: TrialConfig, nt: int, rows: list[TrialRecord]) -> NtSummary:
    kept = [r for r in rows if not r.discarded]
    if not kept:
        raise BenchmarkError(f"all {len(rows)} trials discarded at nt={nt}")

    timed = [r for r in kept if not r.warmup] or kept
    times = np.array([r.solve_time_ns for r in timed], dtype=float)
    correction_times = np.array([r.correction_time_ns for r in timed], dtype=float)

    mean_zf = float(np.mean([r.power_zf for r in kept]))
    mean_slp = float(np.mean([r.power_slp for r in kept]))
    symbols = sum(r.symbols for r in kept)
    ser_zf = ser_slp = None
    if cfg.noise_var > 0 and symbols:
        ser_zf = sum(r.errors_zf for r in kept) / symbols
        ser_slp = sum(r.errors_slp for r in kept) / symbols

    return NtSummary(
        nt=nt,
        trials=len(rows),
        kept=len(kept),
        discarded_trials=len(rows) - len(kept),
        redraws=sum(r.redraws for r in rows),
        mean_power_zf=mean_zf,
        mean_power_slp=mean_slp,
        gain_db=10.0 * math.log10(mean_zf / mean_slp),
        mean_time_ns=float(np.mean(times)),
        median_time_ns=float(np.median(times)),
        p95_time_ns=float(np.percentile(times, 95)),
        median_correction_time_ns=float(np.median(correction_times)),
        correction_rate=sum(r.corrections for r in kept) / (len(kept) * cfg.n_r),
        ser_zf=ser_zf,
        ser_slp=ser_slp,
    )


def run_benchmark(cfg: TrialConfig) -> BenchReport:
    """Paired ZF/SLP power and timing statistics for every n_t in the sweep."""
    logger.info(
        "benchmark %s n_r=%d n_t=%s trials=%d workers=%d",
        cfg.constellation.value, cfg.n_r, cfg.n_t_values, cfg.trials, cfg.workers,
    )
    records = collect_trials(cfg)
    summaries = [summarize(cfg, nt, rows) for nt, rows in records.items()]

    for summary in summaries:
        rate = summary.discarded_trials / summary.trials
        if rate > MAX_DISCARD_RATE:
            raise BenchmarkError(
                f"nt={summary.nt}: {summary.discarded_trials}/{summary.trials} trials discarded"
            )

    return BenchReport(
        config=cfg,
        summaries=summaries,
        records=[row for nt in cfg.n_t_values for row in records[nt]],
    )


def ser_noise_var(cfg: TrialConfig, snr_db: float) -> float:
    """σ² giving receive SNR `snr_db` for a unit-energy alphabet scaled by the mean γ."""
    gamma_power = float(np.mean(cfg.gamma_amplitude**2))
    return gamma_power * 10.0 ** (-snr_db / 10.0)


def ser_check(cfg: TrialConfig, snr_db: float, precoder: Precoder = Precoder.SLP) -> float:
    """
    Symbol error rate over all users and trials at receive SNR `snr_db`.

    Noise draws are paired across precoders and SNR values through the
    trial seeds.
    """
    noisy = cfg.model_copy(update={"noise_var": ser_noise_var(cfg, snr_db)})
    rows = [r for group in collect_trials(noisy).values() for r in group if not r.discarded]
    symbols = sum(r.symbols for r in rows)
    if not symbols:
        raise BenchmarkError("no usable trials for the SER check")
    errors = sum(r.errors_slp if Precoder(precoder) == Precoder.SLP else r.errors_zf for r in rows)
    return errors / symbols
