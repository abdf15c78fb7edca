import numpy as np
import pytest

from unpredictable import point_window


@pytest.fixture(scope="session")
def point_64k():
    """i* window of length 2**16 centered on the origin."""
    return point_window(-(1 << 15), 1 << 16)


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)
