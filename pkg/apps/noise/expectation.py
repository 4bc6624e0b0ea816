# apps/noise/expectation.py
from __future__ import annotations

import numpy as np

from apps.common.enums import Pauli
from apps.common.exceptions import DimensionMismatch
from apps.stab.pauli import PauliString

from .channels import NoiseModel


def commuting_factor(m: NoiseModel, qubit: int, pauli: Pauli) -> float:
    """Σ_α q_α·(±1), the sign telling whether σ_α commutes with ``pauli``."""
    return 1.0 - 2.0 * m.anticommuting_probability(qubit, pauli)


def stabilizer_expectation(s: PauliString, m: NoiseModel) -> float:
    """
    Expectation of a stabilizer ``s`` in its +1 eigenstate after uncorrelated Pauli noise.

    Errors outside the support leave the value untouched; on the support the average over error
    patterns factorizes into one commuting factor per qubit.
    """
    if s.n_qubits != m.n_qubits:
        raise DimensionMismatch(f"operator on {s.n_qubits} qubits, noise on {m.n_qubits}")
    factors = [commuting_factor(m, q, s[q]) for q in sorted(s.support)]
    return float(np.prod(factors)) if factors else 1.0
