"""In-process solver and precoder checks behind `main.py selftest`."""

import logging
import time

import numpy as np

from models.constellation import Constellation
from models.enums import ModulationToken
from models.nnls import NnlsProblem
from schemas.selftest import SelftestConfig, SelftestReport, SuiteResult
from services.channel import draw_channel, zf_power, zf_precoder
from services.constellation import draw_symbols, make_constellation
from services.nnls import NnlsSolver, kkt_violation
from services.oracle import oracle_solve
from services.slp import perturbation, precode_slot

logger = logging.getLogger(__name__)

SELFTEST_MODULATIONS = (ModulationToken.QPSK, ModulationToken.PSK8, ModulationToken.APSK16)


def nnls_oracle_suite(problems: int, max_n: int, tolerance: float, seed: int) -> SuiteResult:
    """Solver objective and KKT residual against exhaustive support enumeration."""
    rng = np.random.default_rng(seed)
    solver = NnlsSolver()
    failures: list[str] = []
    worst = 0.0
    for case in range(problems):
        n = int(rng.integers(1, max_n + 1))
        m = int(rng.integers(n, 2 * n + 2))
        problem = NnlsProblem(a=rng.standard_normal((m, n)), d=rng.standard_normal(m))
        solution = solver.solve(problem)
        _, best = oracle_solve(problem)
        gap = abs(solution.residual_norm - best)
        kkt = kkt_violation(problem, solution.u)
        worst = max(worst, gap, kkt)
        if gap > tolerance:
            failures.append(f"problem {case} ({m}x{n}): objective gap {gap:.3e}")
        if kkt > tolerance:
            failures.append(f"problem {case} ({m}x{n}): KKT violation {kkt:.3e}")
    return SuiteResult(name="nnls-oracle", cases=problems, failures=failures, worst=worst)


def slot_invariant_suite(
    c: Constellation,
    name: str,
    slots: int,
    tolerance: float,
    seed: int,
    n_r: int = 4,
    n_t: int = 6,
) -> SuiteResult:
    """
    Noiseless receive checks per slot: sign-aligned amplitude margins,
    sector membership, APSK inner-ring exactness and QPSK power dominance.
    """
    gamma = np.full(n_r, 10.0 ** (10.0 / 20.0))
    solver = NnlsSolver()
    failures: list[str] = []
    worst = 0.0
    for slot in range(slots):
        h = draw_channel(n_r, n_t, seed + 2 * slot)
        w = zf_precoder(h)
        s = draw_symbols(c, n_r, seed + 2 * slot + 1)
        result = precode_slot(h, w, s, c, gamma, solver=solver)
        target = gamma * s.entries
        y = result.received

        b_r = np.sign(s.entries.real)
        b_i = np.sign(s.entries.imag)
        margin = min(
            float(np.min(b_r * (y.real - target.real))),
            float(np.min(b_i * (y.imag - target.imag))),
        )
        worst = max(worst, -margin)
        if margin < -tolerance:
            failures.append(f"slot {slot}: amplitude margin {margin:.3e}")

        # sector of the top ring (all points for PSK)
        offset = np.angle(y * np.conj(s.entries))
        sector = float(np.max(np.abs(offset)[np.abs(s.entries) ** 2 >= _top_power(c)], initial=0.0))
        if sector > c.theta0 + tolerance:
            failures.append(f"slot {slot}: received phase {sector:.6f} outside ±{c.theta0:.6f}")

        if c.top_ring_power is not None:
            inner = np.abs(s.entries) ** 2 < c.top_ring_power * (1 - 1e-9)
            drift = float(np.max(np.abs(y - target)[inner], initial=0.0))
            if drift > tolerance:
                failures.append(f"slot {slot}: inner-ring receive drift {drift:.3e}")
            if np.any(np.abs(perturbation(result, s))[inner] != 0):
                failures.append(f"slot {slot}: inner-ring perturbation not zeroed")

        if c.order == 4 and result.total_power > zf_power(w, s, gamma) + tolerance:
            failures.append(f"slot {slot}: SLP power above ZF")
    return SuiteResult(name=f"slot-invariants-{name}", cases=slots, failures=failures, worst=worst)


def _top_power(c: Constellation) -> float:
    return c.top_ring_power * (1 - 1e-9) if c.top_ring_power is not None else 0.0


def run_selftest(cfg: SelftestConfig | None = None) -> SelftestReport:
    """Oracle suite first, then one slot suite per modulation. Never raises on a failed check."""
    cfg = cfg or SelftestConfig()
    started = time.perf_counter()
    suites = [nnls_oracle_suite(cfg.problems, cfg.max_n, cfg.tolerance, cfg.seed)]
    for token in SELFTEST_MODULATIONS:
        c = make_constellation(token, cfg.ring_ratio)
        suites.append(slot_invariant_suite(c, token.value, cfg.slots, cfg.tolerance, cfg.seed + 1))
    for suite in suites:
        logger.info("%s: %d cases, %d failures", suite.name, suite.cases, len(suite.failures))
    return SelftestReport(suites=suites, elapsed_s=time.perf_counter() - started)
