"""Complex -> real stacking and the first-quadrant rotation."""

import numpy as np

from core.errors import DegenerateSymbolError, DimensionError
from models.channel import ZfPrecoder
from models.constellation import SymbolVector
from models.stack import RealStack, SignVector


def _sign(t: np.ndarray) -> np.ndarray:
    return np.where(t > 0, 1.0, -1.0)


def stack_complex(x: np.ndarray) -> np.ndarray:
    """[Re x; Im x]."""
    x = np.asarray(x)
    return np.concatenate([x.real, x.imag]).astype(float)


def unstack(x_bar: np.ndarray) -> np.ndarray:
    """x_i = x̄_i + i·x̄_{i+N}."""
    x_bar = np.asarray(x_bar, dtype=float)
    if x_bar.ndim != 1 or x_bar.shape[0] % 2:
        raise DimensionError(f"stacked vector must have even length, got shape {x_bar.shape}")
    n = x_bar.shape[0] // 2
    return x_bar[:n] + 1j * x_bar[n:]


def stack_matrix(w: np.ndarray) -> np.ndarray:
    """[[Re W, -Im W], [Im W, Re W]], so stack_matrix(W) @ stack_complex(v) == stack_complex(W v)."""
    return np.block([[w.real, -w.imag], [w.imag, w.real]])


def sign_vector(s: SymbolVector) -> SignVector:
    return SignVector(b_r=_sign(s.entries.real), b_i=_sign(s.entries.imag))


def build_stack(w: ZfPrecoder, s: SymbolVector, gamma: np.ndarray) -> RealStack:
    """
    Real-valued slot with every symbol rotated into the first quadrant.

    `gamma` is the per-user amplitude constraint √γ_k (linear). Column j of
    W̃ is column j of W̄ times b[j]; B is never materialised.
    """
    gamma = np.asarray(gamma, dtype=float)
    if len(s) != w.n_r or gamma.shape != (w.n_r,):
        raise DimensionError(
            f"precoder serves {w.n_r} users, got {len(s)} symbols and gamma of shape {gamma.shape}"
        )
    if np.any(gamma <= 0):
        raise ValueError("SNR constraints must be positive")
    if np.any(s.entries.real == 0) or np.any(s.entries.imag == 0):
        raise DegenerateSymbolError("symbol with zero in-phase or quadrature part has no quadrant sign")

    signs = sign_vector(s)
    b = signs.b
    w_bar = stack_matrix(w.w)
    s_bar = stack_complex(s.entries)
    return RealStack(
        w_bar=w_bar,
        w_tilde=w_bar * b[None, :],
        s_bar=s_bar,
        s_tilde=s_bar * b,
        gamma_bar=np.concatenate([gamma, gamma]),
        signs=signs,
    )
