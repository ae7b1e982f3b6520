"""
Active-set non-negative least squares.

Lawson-Hanson iterations run on the cross-products AᵀA and Aᵀd, which are
formed once per problem (the fast variant of Bro and de Jong). Every
subproblem is then an |P| x |P| positive definite solve.
"""

import logging

import numpy as np
from scipy import linalg

from core.config import settings
from core.errors import DimensionError, NnlsConvergenceError, NnlsInputError
from models.nnls import NnlsProblem, NnlsSolution

logger = logging.getLogger(__name__)


def _validated(p: NnlsProblem) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(p.a, dtype=float)
    d = np.asarray(p.d, dtype=float)
    if a.ndim != 2 or d.ndim != 1:
        raise NnlsInputError(f"expected a matrix and a vector, got shapes {a.shape} and {d.shape}")
    if a.shape[0] != d.shape[0] or min(a.shape) < 1:
        raise NnlsInputError(f"incompatible shapes {a.shape} and {d.shape}")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(d))):
        raise NnlsInputError("NaN or Inf in NNLS problem")
    return a, d


def objective(p: NnlsProblem, u: np.ndarray) -> float:
    """‖A u - d‖₂."""
    u = np.asarray(u, dtype=float)
    if u.shape != (p.a.shape[1],):
        raise DimensionError(f"u must have length {p.a.shape[1]}, got shape {u.shape}")
    return float(np.linalg.norm(p.a @ u - p.d))


def kkt_violation(p: NnlsProblem, u: np.ndarray) -> float:
    """
    Largest KKT residual of `u`, relative to ‖Aᵀd‖_∞.

    Counts negative gradient on the zero set, any gradient on the positive
    set and any negative entry of u.
    """
    u = np.asarray(u, dtype=float)
    if u.shape != (p.a.shape[1],):
        raise DimensionError(f"u must have length {p.a.shape[1]}, got shape {u.shape}")
    grad = p.a.T @ (p.a @ u - p.d)
    zero = u <= 0
    worst = max(
        float(np.max(-grad[zero], initial=0.0)),
        float(np.max(np.abs(grad[~zero]), initial=0.0)),
        float(np.max(-u, initial=0.0)),
    )
    scale = float(np.max(np.abs(p.a.T @ p.d)))
    return worst / scale if scale > 0 else worst


class NnlsSolver:
    """
    Lawson-Hanson solver with cross-product caching.

    tolerance is relative to ‖Aᵀd‖_∞; max_iter counts outer and inner
    iterations together and defaults to factor·n.
    """

    def __init__(self, tolerance: float | None = None, max_iter: int | None = None):
        self.tolerance = settings.nnls_tolerance if tolerance is None else tolerance
        self.max_iter = max_iter
        if not self.tolerance > 0:
            raise NnlsInputError(f"tolerance must be > 0, got {self.tolerance}")

    def solve(self, p: NnlsProblem) -> NnlsSolution:
        a, d = _validated(p)
        n = a.shape[1]
        max_iter = self.max_iter if self.max_iter is not None else settings.nnls_max_iter_factor * n
        if max_iter < n:
            raise NnlsInputError(f"max_iter must be >= n={n}, got {max_iter}")

        ata = a.T @ a
        atd = a.T @ d
        tol = self.tolerance * float(np.max(np.abs(atd)))

        x = np.zeros(n)
        passive = np.zeros(n, dtype=bool)
        blocked = np.zeros(n, dtype=bool)
        w = atd.copy()
        iterations = 0
        trace: list[float] = []

        def finish() -> NnlsSolution:
            return NnlsSolution(
                u=x,
                residual_norm=float(np.linalg.norm(a @ x - d)),
                active_set=frozenset(int(i) for i in np.flatnonzero(~passive)),
                iterations=iterations,
                kkt_max_violation=kkt_violation(p, x),
                residual_trace=tuple(trace),
            )

        while True:
            candidates = ~passive & ~blocked & (w > tol)
            if not candidates.any():
                break
            if iterations >= max_iter:
                raise NnlsConvergenceError(max_iter, finish())
            iterations += 1

            # lowest index wins ties
            j = int(np.argmax(np.where(candidates, w, -np.inf)))
            passive[j] = True
            z = self._subproblem(ata, atd, passive)
            if z[j] <= 0:
                # entering variable cannot move off zero; keep it out until x changes
                passive[j] = False
                blocked[j] = True
                continue

            while np.any(z[passive] <= 0):
                if iterations >= max_iter:
                    raise NnlsConvergenceError(max_iter, finish())
                iterations += 1
                leaving = np.flatnonzero(passive & (z <= 0))
                steps = x[leaving] / (x[leaving] - z[leaving])
                alpha = float(np.min(steps))
                x = x + alpha * (z - x)
                drop = passive & (x <= 0)
                drop[leaving[int(np.argmin(steps))]] = True
                passive &= ~drop
                x[~passive] = 0.0
                z = self._subproblem(ata, atd, passive)

            x = z
            blocked[:] = False
            w = atd - ata @ x
            trace.append(float(np.linalg.norm(a @ x - d)))
            logger.debug("nnls iteration %d: |P|=%d residual=%.6e", iterations, int(passive.sum()), trace[-1])

        return finish()

    @staticmethod
    def _subproblem(ata: np.ndarray, atd: np.ndarray, passive: np.ndarray) -> np.ndarray:
        """Unconstrained least squares on the passive columns, zeros elsewhere."""
        z = np.zeros(atd.shape[0])
        idx = np.flatnonzero(passive)
        if idx.size == 0:
            return z
        gram = ata[np.ix_(idx, idx)]
        try:
            z[idx] = linalg.solve(gram, atd[idx], assume_a="pos", check_finite=False)
        except linalg.LinAlgError:
            z[idx] = np.linalg.lstsq(gram, atd[idx], rcond=None)[0]
        return z


def solve(p: NnlsProblem, tolerance: float | None = None, max_iter: int | None = None) -> NnlsSolution:
    """Solve min ‖A u - d‖ s.t. u >= 0 with the default solver settings."""
    return NnlsSolver(tolerance=tolerance, max_iter=max_iter).solve(p)
