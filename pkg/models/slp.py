import numpy as np
from pydantic import Field

from models.base import ArrayModel
from models.enums import Correction


class SlpResult(ArrayModel):
    """Everything produced for one precoded symbol slot."""

    u_raw: np.ndarray  # NNLS output before detection-region post-processing
    u_corrected: np.ndarray
    x: np.ndarray  # complex transmit vector, length N_t
    received: np.ndarray  # noiseless H x
    total_power: float
    corrections: tuple[Correction, ...]
    solve_time_ns: int = Field(..., ge=0)  # assembly + NNLS + corrections
    correction_time_ns: int = Field(..., ge=0)
    nnls_iterations: int = 0

    @property
    def corrected_users(self) -> int:
        return sum(1 for c in self.corrections if c != Correction.NONE)
