"""Test configuration and fixtures for pytest."""

import sys
from pathlib import Path

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

import logging

import numpy as np
import pytest

from models.channel import ChannelMatrix
from schemas.trial import TrialConfig
from services.constellation import make_mapsk16, make_mpsk


@pytest.fixture(autouse=True)
def restore_log_level():
    """main() reconfigures the root logger; keep that from leaking between tests."""
    root = logging.getLogger()
    level = root.level
    yield
    root.setLevel(level)


@pytest.fixture
def qpsk():
    return make_mpsk(4)


@pytest.fixture
def psk8():
    return make_mpsk(8)


@pytest.fixture
def apsk16():
    return make_mapsk16(2.7)


@pytest.fixture(name="rng")
def rng_fixture():
    """Seeded generator so random-instance tests are repeatable."""
    return np.random.default_rng(20240611)


@pytest.fixture
def fixed_channel():
    """Well-conditioned 2x2 channel for oracle comparisons."""
    return ChannelMatrix(h=np.array([[1.0, 0.3 + 0.2j], [0.1 - 0.4j, 0.9]]))


@pytest.fixture
def small_config():
    """A few dozen noiseless QPSK trials; fast enough for every run."""
    return TrialConfig(
        n_r=3,
        n_t_values=[3, 5],
        constellation="qpsk",
        gamma_db=10.0,
        trials=24,
        master_seed=7,
        warmup_trials=4,
    )
