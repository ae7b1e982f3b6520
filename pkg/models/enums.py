from enum import Enum


class ConstellationKind(str, Enum):
    """Constellation families."""
    MPSK = "MPSK"
    MAPSK = "MAPSK"


class ModulationToken(str, Enum):
    """Constellations selectable from the command line."""
    QPSK = "qpsk"
    PSK8 = "8psk"
    PSK16 = "16psk"
    APSK16 = "16apsk"


class Correction(str, Enum):
    """Per-user post-processing applied to the NNLS perturbation."""
    NONE = "none"
    LOWER_EDGE = "lower_edge"  # in-phase part pulled back onto the lower sector edge
    UPPER_EDGE = "upper_edge"  # quadrature part pulled back onto the upper sector edge
    APSK_ZEROED = "apsk_zeroed"  # inner-ring user, perturbation removed


class Precoder(str, Enum):
    """Transmit schemes compared by the benchmark."""
    ZF = "zf"
    SLP = "slp"
