# apps/noise/tests/conftest.py
from functools import reduce

import numpy as np
import pytest

from apps.common.enums import Pauli
from apps.stab.dense import PAULI_MATRICES

_AXES = (Pauli.I, Pauli.X, Pauli.Y, Pauli.Z)


def embed(single: np.ndarray, qubit: int, n: int) -> np.ndarray:
    factors = [single if q == qubit else np.eye(2) for q in range(n)]
    return reduce(np.kron, factors)


def apply_channel(rho: np.ndarray, probabilities: np.ndarray) -> np.ndarray:
    """Kraus form of uncorrelated Pauli noise, one qubit at a time."""
    n = probabilities.shape[0]
    for q in range(n):
        rho = sum(
            probabilities[q, k] * embed(PAULI_MATRICES[axis], q, n)
            @ rho
            @ embed(PAULI_MATRICES[axis], q, n)
            for k, axis in enumerate(_AXES)
        )
    return rho


@pytest.fixture
def rng():
    return np.random.default_rng(31)
