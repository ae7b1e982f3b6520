"""Tests for the complex-to-real stacking and the quadrant rotation."""

import numpy as np
import pytest

from core.errors import DegenerateSymbolError, DimensionError
from models.channel import ZfPrecoder
from models.constellation import SymbolVector
from services.channel import draw_channel, zf_precoder
from services.constellation import draw_symbols
from services.realify import build_stack, sign_vector, stack_complex, stack_matrix, unstack


def _symbols(entries):
    entries = np.asarray(entries, dtype=complex)
    return SymbolVector(entries=entries, source_indices=np.arange(len(entries)))


def test_identity_precoder_stacks_to_identity():
    stack = build_stack(ZfPrecoder(w=np.eye(2, dtype=complex)), _symbols([1 + 1j, -1 + 1j]), np.ones(2))
    assert np.array_equal(stack.w_bar, np.eye(4))


def test_third_quadrant_symbol_rotates_positive():
    s = _symbols([-0.6 - 0.8j, 0.3 - 0.4j])
    stack = build_stack(ZfPrecoder(w=np.eye(2, dtype=complex)), s, np.ones(2))
    assert np.allclose(stack.s_tilde, [0.6, 0.3, 0.8, 0.4])
    assert np.all(stack.s_tilde > 0)
    assert np.array_equal(stack.signs.b, [-1.0, 1.0, -1.0, -1.0])


def test_stacked_norm_matches_complex_norm(rng):
    w = rng.standard_normal((5, 3)) + 1j * rng.standard_normal((5, 3))
    v = rng.standard_normal(6)
    complex_norm = np.linalg.norm(w @ (v[:3] + 1j * v[3:]))
    assert np.linalg.norm(stack_matrix(w) @ v) == pytest.approx(complex_norm, abs=1e-12)


def test_stack_matrix_acts_like_complex_product(rng):
    w = rng.standard_normal((4, 2)) + 1j * rng.standard_normal((4, 2))
    v = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    assert np.allclose(stack_matrix(w) @ stack_complex(v), stack_complex(w @ v), atol=1e-12)


def test_rotation_leaves_transmit_vector_unchanged(psk8):
    """Test W̃(Γ̄∘s̃) = W̄(Γ̄∘s̄) since B is applied twice."""
    w = zf_precoder(draw_channel(4, 6, 3))
    s = draw_symbols(psk8, 4, 4)
    stack = build_stack(w, s, np.array([1.0, 2.0, 3.0, 4.0]))
    rotated = stack.w_tilde @ (stack.gamma_bar * stack.s_tilde)
    plain = stack.w_bar @ (stack.gamma_bar * stack.s_bar)
    assert np.allclose(rotated, plain, atol=1e-12)
    assert np.array_equal(stack.gamma_bar, [1.0, 2.0, 3.0, 4.0, 1.0, 2.0, 3.0, 4.0])
    assert np.array_equal(stack.signs.b * stack.signs.b, np.ones(8))


def test_w_tilde_scales_columns_by_sign(qpsk):
    w = zf_precoder(draw_channel(2, 3, 8))
    s = draw_symbols(qpsk, 2, 9)
    stack = build_stack(w, s, np.ones(2))
    for j, sign in enumerate(stack.signs.b):
        assert np.array_equal(stack.w_tilde[:, j], sign * stack.w_bar[:, j])


def test_problem_carries_target(qpsk):
    w = zf_precoder(draw_channel(2, 4, 1))
    stack = build_stack(w, draw_symbols(qpsk, 2, 2), np.full(2, 3.0))
    problem = stack.problem()
    assert np.array_equal(problem.a, stack.w_tilde)
    assert np.allclose(problem.d, -stack.w_tilde @ (stack.gamma_bar * stack.s_tilde))
    assert problem.shape == (8, 4)


def test_unstack_index_rule():
    assert np.array_equal(unstack(np.array([1.0, 2.0, 3.0, 4.0])), [1 + 3j, 2 + 4j])
    assert np.array_equal(unstack(np.zeros(6)), np.zeros(3, dtype=complex))


def test_unstack_inverts_stack(rng):
    x = rng.standard_normal(5) + 1j * rng.standard_normal(5)
    assert np.array_equal(unstack(stack_complex(x)), x)


def test_unstack_rejects_odd_length():
    with pytest.raises(DimensionError):
        unstack(np.ones(3))


def test_sign_vector_never_zero():
    signs = sign_vector(_symbols([0.5 - 0.5j, -0.1 + 0.2j]))
    assert np.array_equal(signs.b_r, [1.0, -1.0])
    assert np.array_equal(signs.b_i, [-1.0, 1.0])


def test_build_stack_rejects_axis_symbol():
    with pytest.raises(DegenerateSymbolError):
        build_stack(ZfPrecoder(w=np.eye(2, dtype=complex)), _symbols([1 + 0j, 1 + 1j]), np.ones(2))


def test_build_stack_checks_dimensions(qpsk):
    w = ZfPrecoder(w=np.eye(3, dtype=complex))
    with pytest.raises(DimensionError):
        build_stack(w, draw_symbols(qpsk, 2, 0), np.ones(2))
    with pytest.raises(DimensionError):
        build_stack(w, draw_symbols(qpsk, 3, 0), np.ones(2))
    with pytest.raises(ValueError):
        build_stack(w, draw_symbols(qpsk, 3, 0), np.array([1.0, 0.0, 1.0]))
