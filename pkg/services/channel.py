"""Random MIMO channels, the ZF precoder and the receive equation."""

import logging

import numpy as np
from scipy import linalg

from core.config import settings
from core.errors import DimensionError, SingularChannelError
from models.channel import ChannelMatrix, ZfPrecoder
from models.constellation import SymbolVector

logger = logging.getLogger(__name__)


def _complex_normal(rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    """CN(0, 1): real and imaginary parts each N(0, 1/2)."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def draw_channel(n_r: int, n_t: int, rng_seed: int) -> ChannelMatrix:
    """I.i.d. CN(0, 1) channel, reproducible under `rng_seed`."""
    if n_r < 1 or n_t < n_r:
        raise DimensionError(f"ZF needs n_t >= n_r >= 1, got n_r={n_r}, n_t={n_t}")
    rng = np.random.default_rng(rng_seed)
    return ChannelMatrix(h=_complex_normal(rng, (n_r, n_t)))


def zf_precoder(h: ChannelMatrix, condition_limit: float | None = None) -> ZfPrecoder:
    """
    Right pseudo-inverse W = H^H (H H^H)^-1.

    The Hermitian Gram matrix is Cholesky-factorised rather than inverted.
    Raises SingularChannelError when its condition number exceeds the limit.
    """
    limit = condition_limit if condition_limit is not None else settings.condition_limit
    gram = h.h @ h.h.conj().T
    condition = float(np.linalg.cond(gram))
    if not np.isfinite(condition) or condition > limit:
        raise SingularChannelError(condition, limit)
    logger.debug("ZF precoder %dx%d, Gram condition %.3e", h.n_t, h.n_r, condition)

    factor = linalg.cho_factor(gram, lower=True)
    w = linalg.cho_solve(factor, h.h).conj().T
    return ZfPrecoder(w=w, condition=condition)


def zf_transmit(w: ZfPrecoder, s: SymbolVector, gamma: np.ndarray) -> np.ndarray:
    """Baseline transmit vector W(Γ∘s)."""
    if len(s) != w.n_r or gamma.shape[0] != w.n_r:
        raise DimensionError(f"precoder serves {w.n_r} users, got {len(s)} symbols / {gamma.shape[0]} gains")
    return w.w @ (gamma * s.entries)


def zf_power(w: ZfPrecoder, s: SymbolVector, gamma: np.ndarray) -> float:
    """‖W(Γ∘s)‖²."""
    x = zf_transmit(w, s, gamma)
    return float(np.vdot(x, x).real)


def apply_channel(h: ChannelMatrix, x: np.ndarray, noise_var: float, rng_seed: int) -> np.ndarray:
    """
    y = Hx + n with n ~ CN(0, noise_var).

    The noise is drawn as a standard CN(0, 1) vector and then scaled, so two
    calls with the same seed and different variances see the same noise
    direction.
    """
    x = np.asarray(x)
    if x.ndim != 1 or x.shape[0] != h.n_t:
        raise DimensionError(f"transmit vector must have length {h.n_t}, got shape {x.shape}")
    if noise_var < 0:
        raise ValueError(f"noise variance must be >= 0, got {noise_var}")

    y = h.h @ x
    if noise_var == 0:
        return y
    rng = np.random.default_rng(rng_seed)
    return y + np.sqrt(noise_var) * _complex_normal(rng, (h.n_r,))
