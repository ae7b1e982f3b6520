import numpy as np
from pydantic import Field

from models.base import ArrayModel
from models.enums import ConstellationKind


class Constellation(ArrayModel):
    """Symbol alphabet with the geometry the detection-region logic needs."""

    kind: ConstellationKind
    order: int = Field(..., ge=4)
    points: np.ndarray  # complex, shape (order,)
    ring_radii: tuple[float, ...] = ()  # MAPSK only, inner -> outer
    ring_sizes: tuple[int, ...] = ()  # points per ring, inner -> outer
    theta0: float  # sector half-angle; top ring for MAPSK
    top_ring_power: float | None = None  # MAPSK only

    @property
    def is_multilevel(self) -> bool:
        return self.kind == ConstellationKind.MAPSK

    @property
    def mean_energy(self) -> float:
        return float(np.mean(np.abs(self.points) ** 2))


class SymbolVector(ArrayModel):
    """One symbol per receive antenna, with the alphabet indices they came from."""

    entries: np.ndarray  # complex, shape (n_r,)
    source_indices: np.ndarray  # int, shape (n_r,)

    def __len__(self) -> int:
        return int(self.entries.shape[0])
