# apps/stab/dense.py
"""Dense matrices for small instances; used for exact reference computations."""
from __future__ import annotations

from functools import reduce

import numpy as np
import numpy.typing as npt

from apps.common.enums import Pauli
from apps.common.exceptions import InvalidTableau, TooLarge

from .pauli import PauliString
from .tableau import StabilizerTableau

ComplexArray = npt.NDArray[np.complex128]

PAULI_MATRICES: dict[Pauli, ComplexArray] = {
    Pauli.I: np.eye(2, dtype=np.complex128),
    Pauli.X: np.array([[0, 1], [1, 0]], dtype=np.complex128),
    Pauli.Y: np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    Pauli.Z: np.array([[1, 0], [0, -1]], dtype=np.complex128),
}

MAX_DENSE_QUBITS = 16


def pauli_matrix(s: PauliString) -> ComplexArray:
    """Kronecker product of the single-qubit factors, qubit 0 most significant."""
    return reduce(np.kron, (PAULI_MATRICES[s[q]] for q in range(s.n_qubits)))


def apply_pauli(state: ComplexArray, s: PauliString) -> ComplexArray:
    """
    Applies ``s`` to a statevector, or to every column of a 2^N×K array, without building the
    full matrix.
    """
    n = s.n_qubits
    tensor = state.reshape((2,) * n + state.shape[1:])
    for q in sorted(s.support):
        tensor = np.moveaxis(
            np.tensordot(PAULI_MATRICES[s[q]], tensor, axes=([1], [q])), 0, q
        )
    return tensor.reshape(state.shape)


def stabilizer_state(t: StabilizerTableau, seed: int = 0) -> ComplexArray:
    """
    Normalized statevector fixed by every stabilizer of ``t`` (up to a global phase).

    Every generator is taken as the Hermitian tensor product of its factors with sign +1. Other
    sign choices give states that differ by a local Pauli operator.
    """
    n = t.n_qubits
    if n > MAX_DENSE_QUBITS:
        raise TooLarge(f"dense statevector limited to {MAX_DENSE_QUBITS} qubits, got {n}")
    rng = np.random.default_rng(seed)
    state = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    for s in t.stabilizers():
        state = 0.5 * (state + apply_pauli(state, s))
    norm = np.linalg.norm(state)
    if norm < 1e-9:
        raise InvalidTableau("projector onto the stabilizer space vanished")
    return state / norm
