"""Tests for channel draws, the ZF precoder and the receive equation."""

import numpy as np
import pytest

from core.errors import DimensionError, SingularChannelError
from models.channel import ChannelMatrix
from services.channel import apply_channel, draw_channel, zf_power, zf_precoder, zf_transmit
from services.constellation import draw_symbols


def test_draw_channel_is_seeded():
    first = draw_channel(10, 10, 7)
    second = draw_channel(10, 10, 7)
    assert first.h.shape == (10, 10)
    assert np.array_equal(first.h, second.h)
    assert not np.array_equal(first.h, draw_channel(10, 10, 8).h)


def test_draw_channel_unit_variance():
    """Test E|h|² ≈ 1 with the power split evenly between Re and Im."""
    h = draw_channel(100, 1000, 3).h
    assert np.mean(np.abs(h) ** 2) == pytest.approx(1.0, rel=0.02)
    assert np.mean(h.real**2) == pytest.approx(0.5, rel=0.03)


def test_draw_channel_needs_enough_antennas():
    with pytest.raises(DimensionError):
        draw_channel(4, 2, 1)


def test_zf_identity_channel():
    w = zf_precoder(ChannelMatrix(h=np.eye(3, dtype=complex)))
    assert np.allclose(w.w, np.eye(3), atol=1e-12)


def test_zf_right_inverse():
    h = draw_channel(4, 6, 12)
    w = zf_precoder(h)
    assert w.w.shape == (6, 4)
    assert np.linalg.norm(h.h @ w.w - np.eye(4)) < 1e-9


def test_zf_rejects_duplicated_row():
    h = draw_channel(3, 5, 2).h.copy()
    h[2] = h[0]
    with pytest.raises(SingularChannelError) as exc:
        zf_precoder(ChannelMatrix(h=h))
    assert exc.value.condition > exc.value.limit


def test_zf_scale_covariance():
    h = draw_channel(4, 6, 21)
    w = zf_precoder(h).w
    scaled = zf_precoder(ChannelMatrix(h=2.5 * h.h)).w
    assert np.allclose(scaled, w / 2.5, atol=1e-9)


def test_noiseless_receive_equals_constrained_symbols(qpsk):
    """Test H·W(Γ∘s + u) = Γ∘s + u."""
    h = draw_channel(4, 6, 30)
    w = zf_precoder(h)
    s = draw_symbols(qpsk, 4, 31)
    gamma = np.full(4, np.sqrt(10.0))
    u = np.array([0.1 + 0.2j, -0.3j, 0.5, 0.0])

    assert np.allclose(apply_channel(h, zf_transmit(w, s, gamma), 0.0, 0), gamma * s.entries, atol=1e-9)
    x = w.w @ (gamma * s.entries + u)
    assert np.allclose(apply_channel(h, x, 0.0, 0), gamma * s.entries + u, atol=1e-9)


def test_noise_power():
    """Test E‖y - Hx‖² ≈ N_r·σ² over many noise draws."""
    h = draw_channel(4, 4, 1)
    x = np.ones(4, dtype=complex)
    clean = h.h @ x
    energy = [np.sum(np.abs(apply_channel(h, x, 0.5, seed) - clean) ** 2) for seed in range(2000)]
    assert np.mean(energy) == pytest.approx(4 * 0.5, rel=0.05)


def test_noise_direction_is_shared_across_variances():
    h = draw_channel(3, 3, 4)
    x = np.zeros(3, dtype=complex)
    assert np.allclose(apply_channel(h, x, 4.0, 9), 2.0 * apply_channel(h, x, 1.0, 9))


def test_apply_channel_validates_inputs():
    h = draw_channel(2, 3, 0)
    with pytest.raises(DimensionError):
        apply_channel(h, np.ones(2), 0.0, 0)
    with pytest.raises(ValueError):
        apply_channel(h, np.ones(3), -1.0, 0)


def test_zf_power_matches_transmit_norm(qpsk):
    h = draw_channel(3, 4, 5)
    w = zf_precoder(h)
    s = draw_symbols(qpsk, 3, 6)
    gamma = np.array([1.0, 2.0, 3.0])
    assert zf_power(w, s, gamma) == pytest.approx(np.linalg.norm(zf_transmit(w, s, gamma)) ** 2)
