# apps/gf2/tests/conftest.py
import numpy as np
import pytest

from apps.gf2.bitmatrix import BitMatrix


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture
def unit_upper():
    """[[1,1],[0,1]], its own inverse mod 2."""
    return BitMatrix.from_rows([[1, 1], [0, 1]])


@pytest.fixture
def all_ones():
    return BitMatrix.from_rows([[1, 1], [1, 1]])
