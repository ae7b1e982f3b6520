"""Models package for the in-memory domain types."""

from models.enums import ConstellationKind, ModulationToken, Correction, Precoder
from models.constellation import Constellation, SymbolVector
from models.channel import ChannelMatrix, ZfPrecoder
from models.nnls import NnlsProblem, NnlsSolution
from models.stack import SignVector, RealStack
from models.slp import SlpResult

__all__ = [
    "ConstellationKind",
    "ModulationToken",
    "Correction",
    "Precoder",
    "Constellation",
    "SymbolVector",
    "ChannelMatrix",
    "ZfPrecoder",
    "NnlsProblem",
    "NnlsSolution",
    "SignVector",
    "RealStack",
    "SlpResult",
]
