"""Constellation generation, symbol drawing and minimum-distance detection."""

import logging

import numpy as np

from core.errors import InvalidGeometryError, InvalidOrderError
from models.constellation import Constellation, SymbolVector
from models.enums import ConstellationKind, ModulationToken

logger = logging.getLogger(__name__)

DEFAULT_RING_RATIO = 2.7

# 4+12 layout
APSK16_RING_SIZES = (4, 12)


def make_mpsk(order: int) -> Constellation:
    """Unit-modulus M-PSK rotated by π/M so no point sits on an axis."""
    if order < 4 or (order & (order - 1)) != 0:
        raise InvalidOrderError(f"PSK order must be a power of 2 >= 4, got {order}")

    j = np.arange(order)
    angles = np.pi / order + 2 * np.pi * j / order
    return Constellation(
        kind=ConstellationKind.MPSK,
        order=order,
        points=np.exp(1j * angles),
        theta0=np.pi / order,
    )


def make_mapsk16(ring_ratio: float = DEFAULT_RING_RATIO) -> Constellation:
    """
    16-APSK with 4 inner and 12 outer points, normalised to unit average energy.

    Inner points sit at π/4 + kπ/2, outer points at π/12 + kπ/6. The outer
    radius is `ring_ratio` times the inner one.
    """
    if not ring_ratio > 1:
        raise InvalidGeometryError(f"ring ratio must be > 1, got {ring_ratio}")

    n_inner, n_outer = APSK16_RING_SIZES
    order = n_inner + n_outer
    r1 = np.sqrt(order / (n_inner + n_outer * ring_ratio**2))
    r2 = ring_ratio * r1
    logger.debug("16-APSK radii r1=%.6f r2=%.6f", r1, r2)

    inner = r1 * np.exp(1j * (np.pi / 4 + np.pi / 2 * np.arange(n_inner)))
    outer = r2 * np.exp(1j * (np.pi / n_outer + 2 * np.pi / n_outer * np.arange(n_outer)))

    return Constellation(
        kind=ConstellationKind.MAPSK,
        order=order,
        points=np.concatenate([inner, outer]),
        ring_radii=(float(r1), float(r2)),
        ring_sizes=APSK16_RING_SIZES,
        theta0=np.pi / n_outer,
        top_ring_power=float(r2**2),
    )


def make_constellation(token: ModulationToken | str, ring_ratio: float = DEFAULT_RING_RATIO) -> Constellation:
    """Build the constellation named by a CLI token."""
    token = ModulationToken(token)
    if token == ModulationToken.APSK16:
        return make_mapsk16(ring_ratio)
    orders = {
        ModulationToken.QPSK: 4,
        ModulationToken.PSK8: 8,
        ModulationToken.PSK16: 16,
    }
    return make_mpsk(orders[token])


def draw_symbols(c: Constellation, n: int, rng_seed: int) -> SymbolVector:
    """n i.i.d. uniform draws from the alphabet."""
    if n < 1:
        raise ValueError(f"need at least one symbol, got {n}")
    rng = np.random.default_rng(rng_seed)
    idx = rng.integers(0, c.order, size=n)
    return SymbolVector(entries=c.points[idx], source_indices=idx)


def detect(c: Constellation, r: np.ndarray) -> np.ndarray:
    """
    Minimum-distance decisions for amplitude-normalised samples `r`.

    PSK: nearest point (the angular sector). APSK: ring by the midpoint
    radius, then nearest angle among that ring's points.
    """
    r = np.asarray(r, dtype=complex)
    if c.kind == ConstellationKind.MPSK:
        return np.abs(r[:, None] - c.points[None, :]).argmin(axis=1)

    bounds = np.cumsum((0,) + c.ring_sizes)
    thresholds = [(a + b) / 2 for a, b in zip(c.ring_radii[:-1], c.ring_radii[1:])]
    ring = np.searchsorted(thresholds, np.abs(r))

    decisions = np.empty(r.shape[0], dtype=int)
    angles = np.angle(c.points)
    for k, sample in enumerate(r):
        lo, hi = bounds[ring[k]], bounds[ring[k] + 1]
        alignment = np.cos(np.angle(sample) - angles[lo:hi])
        decisions[k] = lo + int(alignment.argmax())
    return decisions
