"""
Symbol-level precoding: NNLS perturbation plus detection-region corrections.

The perturbation ũ lives in the rotated (first-quadrant) frame where every
symbol has positive coordinates and ũ >= 0 is the whole constraint set.
"""

import logging
import time

import numpy as np

from core.errors import DimensionError
from models.channel import ChannelMatrix, ZfPrecoder
from models.constellation import Constellation, SymbolVector
from models.enums import ConstellationKind, Correction
from models.slp import SlpResult
from services.nnls import NnlsSolver
from services.realify import build_stack, sign_vector, stack_complex, unstack

logger = logging.getLogger(__name__)

# edges closer than this to 0 or π/2 are treated as the axis itself
EDGE_SNAP = 1e-12
# relative slack for deciding |s|² < P_t on float radii
RING_SLACK = 1e-9


def sector_violations(
    u_raw: np.ndarray,
    s_tilde: np.ndarray,
    theta0: float,
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """
    Per-user sector edges in the rotated frame and which one each raw
    perturbation crosses.

    Returns (below, above, lower, upper). The tests are cross-multiplied, so
    ũ_k = 0 needs no special case, and for θ₀ <= π/4 no user is ever both
    below and above.
    """
    n = u_raw.shape[0] // 2
    u_i, u_q = u_raw[:n], u_raw[n:]
    theta = np.arctan2(s_tilde[n:], s_tilde[:n])
    lower = theta - theta0
    upper = theta + theta0
    lower = np.where(np.abs(lower) < EDGE_SNAP, 0.0, lower)
    upper = np.where(np.abs(upper - np.pi / 2) < EDGE_SNAP, np.pi / 2, upper)

    # a horizontal lower edge or vertical upper edge cannot be crossed by ũ >= 0
    below = (lower > 0) & (u_q * np.cos(lower) < u_i * np.sin(lower))
    above = (upper < np.pi / 2) & (u_q * np.cos(upper) > u_i * np.sin(upper))
    return below, above, lower, upper


def correct_mpsk(
    u_raw: np.ndarray,
    s_tilde: np.ndarray,
    c: Constellation,
) -> tuple[np.ndarray, tuple[Correction, ...]]:
    """
    Pull each user's perturbation back inside its M-PSK sector.

    With θ_k the rotated symbol angle and θ₀ the sector half-angle, the
    direction of (ũ_k, ũ_{k+N}) must lie in [θ_k - θ₀, θ_k + θ₀]. Below the
    lower edge the in-phase part is reduced onto it; above the upper edge
    the quadrature part is. Both tests use the raw values.
    """
    u_raw = np.asarray(u_raw, dtype=float)
    n = u_raw.shape[0] // 2
    if u_raw.shape != (2 * n,) or np.shape(s_tilde) != (2 * n,):
        raise DimensionError(f"expected stacked vectors of equal even length, got {u_raw.shape} and {np.shape(s_tilde)}")
    if c.kind == ConstellationKind.MPSK and c.order == 4:
        return u_raw.copy(), (Correction.NONE,) * n

    u_i, u_q = u_raw[:n], u_raw[n:]
    below, above, lower, upper = sector_violations(u_raw, s_tilde, c.theta0)

    corrected = u_raw.copy()
    with np.errstate(divide="ignore", invalid="ignore"):
        corrected[:n] = np.where(below, u_q / np.tan(lower), u_i)
        corrected[n:] = np.where(above, u_i * np.tan(upper), u_q)

    flags = tuple(
        Correction.LOWER_EDGE if lo else Correction.UPPER_EDGE if hi else Correction.NONE
        for lo, hi in zip(below, above)
    )
    return corrected, flags


def gate_apsk(
    u: np.ndarray,
    s: SymbolVector,
    c: Constellation,
) -> tuple[np.ndarray, tuple[Correction, ...]]:
    """
    Only top-ring users keep a perturbation; it is then sector-corrected
    with the top ring's half-angle. Inner-ring users fall back to ZF.
    """
    if c.kind != ConstellationKind.MAPSK or c.top_ring_power is None:
        raise ValueError("gate_apsk needs an APSK constellation")
    n = len(s)
    corrected, flags = correct_mpsk(u, np.abs(stack_complex(s.entries)), c)

    inner = np.abs(s.entries) ** 2 < c.top_ring_power * (1 - RING_SLACK)
    corrected[:n][inner] = 0.0
    corrected[n:][inner] = 0.0
    flags = tuple(Correction.APSK_ZEROED if low else f for low, f in zip(inner, flags))
    return corrected, flags


def apply_corrections(
    u_raw: np.ndarray,
    s_tilde: np.ndarray,
    s: SymbolVector,
    c: Constellation,
) -> tuple[np.ndarray, tuple[Correction, ...]]:
    """Dispatch on the constellation family."""
    if c.kind == ConstellationKind.MAPSK:
        return gate_apsk(u_raw, s, c)
    return correct_mpsk(u_raw, s_tilde, c)


def precode_slot(
    h: ChannelMatrix,
    w: ZfPrecoder,
    s: SymbolVector,
    c: Constellation,
    gamma: np.ndarray,
    solver: NnlsSolver | None = None,
) -> SlpResult:
    """
    Minimum-power transmit vector meeting the per-user amplitude constraints.

    The timed region covers stacking, the NNLS solve and the corrections.
    """
    if h.n_r != w.n_r or h.n_t != w.n_t:
        raise DimensionError(f"channel {h.h.shape} does not match precoder {w.w.shape}")
    solver = solver or NnlsSolver()

    started = time.perf_counter_ns()
    stack = build_stack(w, s, gamma)
    solution = solver.solve(stack.problem())
    corrections_started = time.perf_counter_ns()
    u_corrected, flags = apply_corrections(solution.u, stack.s_tilde, s, c)
    corrections_done = time.perf_counter_ns()
    x = unstack(stack.transmit_bar(u_corrected))
    finished = time.perf_counter_ns()

    logger.debug(
        "slot solved in %d iterations, %d users corrected",
        solution.iterations,
        sum(f != Correction.NONE for f in flags),
    )
    return SlpResult(
        u_raw=solution.u,
        u_corrected=u_corrected,
        x=x,
        received=h.h @ x,
        total_power=float(np.vdot(x, x).real),
        corrections=flags,
        solve_time_ns=int(finished - started),
        correction_time_ns=int(corrections_done - corrections_started),
        nnls_iterations=int(solution.iterations),
    )


def perturbation(result: SlpResult, s: SymbolVector) -> np.ndarray:
    """Complex u seen at the noiseless receiver: b∘ũ reassembled."""
    n = len(s)
    signs = sign_vector(s)
    return signs.b_r * result.u_corrected[:n] + 1j * signs.b_i * result.u_corrected[n:]
