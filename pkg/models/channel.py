import numpy as np

from models.base import ArrayModel


class ChannelMatrix(ArrayModel):
    """Complex N_r x N_t downlink channel, row k belongs to receive antenna k."""

    h: np.ndarray

    @property
    def n_r(self) -> int:
        return int(self.h.shape[0])

    @property
    def n_t(self) -> int:
        return int(self.h.shape[1])


class ZfPrecoder(ArrayModel):
    """Right pseudo-inverse W = H^H (H H^H)^-1, shape N_t x N_r."""

    w: np.ndarray
    condition: float = 1.0  # of H H^H at construction

    @property
    def n_t(self) -> int:
        return int(self.w.shape[0])

    @property
    def n_r(self) -> int:
        return int(self.w.shape[1])
