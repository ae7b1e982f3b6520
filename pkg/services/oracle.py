"""Brute-force reference solvers used by the tests and `selftest`."""

from itertools import combinations

import numpy as np

from models.channel import ZfPrecoder
from models.constellation import SymbolVector
from models.nnls import NnlsProblem
from services.realify import sign_vector


def oracle_solve(p: NnlsProblem) -> tuple[np.ndarray, float]:
    """
    Exhaustive NNLS: least squares on every support subset, best feasible one wins.

    The NNLS optimum is the unconstrained LS solution on its own support, so
    the minimum over feasible subset solutions is the optimum. 2^n solves.
    """
    a, d = np.asarray(p.a, dtype=float), np.asarray(p.d, dtype=float)
    n = a.shape[1]
    best_u = np.zeros(n)
    best = float(np.linalg.norm(d))
    for size in range(1, n + 1):
        for support in combinations(range(n), size):
            cols = list(support)
            z = np.linalg.lstsq(a[:, cols], d, rcond=None)[0]
            if np.any(z < 0):
                continue
            u = np.zeros(n)
            u[cols] = z
            value = float(np.linalg.norm(a @ u - d))
            if value < best:
                best, best_u = value, u
    return best_u, best


def projected_gradient_slot(
    w: ZfPrecoder,
    s: SymbolVector,
    gamma: np.ndarray,
    iterations: int = 20000,
) -> np.ndarray:
    """
    Accelerated projected gradient on the complex form of the slot problem.

        min_u ‖W(Γ∘s + u)‖²  s.t.  b_r∘Re(u) >= 0,  b_i∘Im(u) >= 0

    Returns the complex perturbation u. Independent of the stacking code
    except for the quadrant signs.
    """
    signs = sign_vector(s)
    base = np.asarray(gamma, dtype=float) * s.entries
    gram = w.w.conj().T @ w.w
    step = 1.0 / (2.0 * float(np.linalg.eigvalsh(gram).max()))

    def project(u: np.ndarray) -> np.ndarray:
        re = signs.b_r * np.maximum(signs.b_r * u.real, 0.0)
        im = signs.b_i * np.maximum(signs.b_i * u.imag, 0.0)
        return re + 1j * im

    u = np.zeros_like(base)
    y = u.copy()
    t = 1.0
    for _ in range(iterations):
        grad = 2.0 * gram @ (base + y)
        u_next = project(y - step * grad)
        t_next = (1.0 + np.sqrt(1.0 + 4.0 * t * t)) / 2.0
        y = u_next + ((t - 1.0) / t_next) * (u_next - u)
        u, t = u_next, t_next
    return u
