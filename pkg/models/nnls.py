import numpy as np
from pydantic import Field

from models.base import ArrayModel


class NnlsProblem(ArrayModel):
    """min ‖A u - d‖₂ subject to u >= 0."""

    a: np.ndarray  # m x n
    d: np.ndarray  # m

    @property
    def shape(self) -> tuple[int, int]:
        return int(self.a.shape[0]), int(self.a.shape[1])


class NnlsSolution(ArrayModel):
    """Solver output with the diagnostics needed to certify it."""

    u: np.ndarray
    residual_norm: float
    active_set: frozenset[int]  # indices pinned at zero
    iterations: int = Field(..., ge=0)
    kkt_max_violation: float  # relative to ‖Aᵀd‖_∞
    residual_trace: tuple[float, ...] = ()  # after each outer iteration

    @property
    def passive_set(self) -> frozenset[int]:
        return frozenset(range(self.u.shape[0])) - self.active_set
