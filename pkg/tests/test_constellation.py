"""Tests for constellation generation, symbol draws and detection."""

import numpy as np
import pytest

from core.errors import InvalidGeometryError, InvalidOrderError
from models.enums import ConstellationKind, ModulationToken
from services.constellation import detect, draw_symbols, make_constellation, make_mapsk16, make_mpsk


def test_qpsk_points(qpsk):
    """Test QPSK sits on the diagonals with unit modulus."""
    expected = np.exp(1j * np.array([np.pi / 4, 3 * np.pi / 4, 5 * np.pi / 4, 7 * np.pi / 4]))
    assert np.allclose(qpsk.points, expected, atol=1e-15)
    assert qpsk.kind == ConstellationKind.MPSK
    assert qpsk.theta0 == pytest.approx(np.pi / 4)


def test_8psk_spacing_and_half_angle(psk8):
    """Test 8-PSK has uniform π/4 spacing and θ₀ = π/8."""
    angles = np.unwrap(np.angle(psk8.points))
    assert len(psk8.points) == 8
    assert np.allclose(np.diff(angles), np.pi / 4)
    assert np.allclose(np.abs(psk8.points), 1.0)
    assert psk8.theta0 == pytest.approx(np.pi / 8)


@pytest.mark.parametrize("order", [0, 2, 3, 6, 12, 20])
def test_mpsk_rejects_bad_order(order):
    with pytest.raises(InvalidOrderError):
        make_mpsk(order)


def test_apsk16_geometry(apsk16):
    """Test ring ratio, unit average energy and the top-ring power."""
    r1, r2 = apsk16.ring_radii
    assert r2 == pytest.approx(2.7 * r1)
    assert (4 * r1**2 + 12 * r2**2) / 16 == pytest.approx(1.0)
    assert apsk16.mean_energy == pytest.approx(1.0)
    assert apsk16.top_ring_power == pytest.approx(r2**2)
    assert apsk16.top_ring_power > 1
    assert apsk16.ring_sizes == (4, 12)
    assert apsk16.theta0 == pytest.approx(np.pi / 12)

    inner, outer = apsk16.points[:4], apsk16.points[4:]
    assert np.allclose(np.abs(inner), r1)
    assert np.allclose(np.abs(outer), r2)
    assert np.allclose(np.angle(inner[0]), np.pi / 4)
    assert np.allclose(np.angle(outer[0]), np.pi / 12)


@pytest.mark.parametrize("ratio", [1.0, 0.5, -2.0])
def test_apsk16_rejects_degenerate_rings(ratio):
    with pytest.raises(InvalidGeometryError):
        make_mapsk16(ratio)


@pytest.mark.parametrize("token", list(ModulationToken))
def test_every_constellation_is_zero_mean_and_off_axis(token):
    """Test the symmetry and axis-avoidance every alphabet relies on."""
    c = make_constellation(token)
    assert abs(np.sum(c.points)) < 1e-9
    assert np.min(np.minimum(np.abs(c.points.real), np.abs(c.points.imag))) > 0
    if c.kind == ConstellationKind.MPSK:
        assert c.theta0 * c.order == pytest.approx(np.pi)


def test_make_constellation_tokens():
    assert make_constellation("qpsk").order == 4
    assert make_constellation("8psk").order == 8
    assert make_constellation("16psk").order == 16
    assert make_constellation("16apsk").is_multilevel
    with pytest.raises(ValueError):
        make_constellation("32qam")


def test_draw_symbols_is_seeded(qpsk):
    first = draw_symbols(qpsk, 10, 42)
    second = draw_symbols(qpsk, 10, 42)
    assert np.array_equal(first.entries, second.entries)
    assert np.array_equal(first.source_indices, second.source_indices)
    assert np.array_equal(qpsk.points[first.source_indices], first.entries)


def test_draw_symbols_frequencies(qpsk):
    """Test each QPSK point appears about a quarter of the time."""
    n = 100_000
    counts = np.bincount(draw_symbols(qpsk, n, 5).source_indices, minlength=4)
    sigma = np.sqrt(n * 0.25 * 0.75)
    assert np.all(np.abs(counts - n / 4) < 4 * sigma)


def test_draw_symbols_apsk_energy(apsk16):
    s = draw_symbols(apsk16, 100_000, 11)
    assert np.mean(np.abs(s.entries) ** 2) == pytest.approx(1.0, rel=0.01)


def test_draw_symbols_needs_one_symbol(qpsk):
    with pytest.raises(ValueError):
        draw_symbols(qpsk, 0, 1)


@pytest.mark.parametrize("token", list(ModulationToken))
def test_detect_recovers_perturbed_points(token, rng):
    """Test small perturbations stay inside each point's decision region."""
    c = make_constellation(token)
    idx = np.arange(c.order)
    noisy = c.points + 0.05 * np.exp(2j * np.pi * rng.random(c.order))
    assert np.array_equal(detect(c, c.points), idx)
    assert np.array_equal(detect(c, noisy), idx)


def test_detect_psk_ignores_amplitude(psk8):
    assert np.array_equal(detect(psk8, 3.0 * psk8.points), np.arange(8))


def test_detect_apsk_splits_rings(apsk16):
    """Test a sample just outside the ring midpoint goes to the outer ring."""
    r1, r2 = apsk16.ring_radii
    mid = (r1 + r2) / 2
    decisions = detect(apsk16, np.array([0.99 * mid, 1.01 * mid]) * np.exp(1j * np.pi / 4))
    assert decisions[0] == 0  # inner point at π/4
    assert decisions[1] == 4 + 1  # outer point at π/12 + π/6
