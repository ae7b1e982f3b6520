"""Exception hierarchy shared by all services.

Library code raises these; only the CLI layer turns them into exit codes.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from models.nnls import NnlsSolution


class SlpError(Exception):
    """Base class for every error raised by this package."""


class InvalidOrderError(SlpError, ValueError):
    """Constellation order is not a power of two >= 4."""


class InvalidGeometryError(SlpError, ValueError):
    """APSK ring ratio does not separate the rings."""


class DimensionError(SlpError, ValueError):
    """Operand shapes do not agree."""


class SingularChannelError(SlpError):
    """H·H^H is too badly conditioned to invert."""

    def __init__(self, condition: float, limit: float):
        self.condition = condition
        self.limit = limit
        super().__init__(f"channel Gram matrix condition {condition:.3e} exceeds {limit:.1e}")


class DegenerateSymbolError(SlpError, ValueError):
    """A symbol has an exactly zero real or imaginary part."""


class NnlsInputError(SlpError, ValueError):
    """NNLS problem or solver parameters are not usable."""


class NnlsConvergenceError(SlpError):
    """Active-set iterations hit max_iter; `best` holds the last feasible iterate."""

    def __init__(self, max_iter: int, best: NnlsSolution):
        self.max_iter = max_iter
        self.best = best
        super().__init__(f"NNLS did not converge within {max_iter} iterations")


class BenchmarkError(SlpError):
    """Benchmark produced no usable trials or discarded too many."""
