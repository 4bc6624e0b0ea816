# apps/le/negativity.py
"""Two-qubit negativity from the spectrum of the partial transpose."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from apps.common.exceptions import InvalidState

from .configs import LeConfigs

ComplexArray = npt.NDArray[np.complex128]


@dataclass(frozen=True, eq=False)
class TwoQubitState:
    """4×4 density matrix on (a, b), a being the more significant factor."""

    matrix: ComplexArray

    def __post_init__(self) -> None:
        rho = np.array(self.matrix, dtype=np.complex128)
        tolerance = LeConfigs.get("STATE_TOLERANCE")
        if rho.shape != (4, 4):
            raise InvalidState(f"two-qubit state must be 4x4, got {rho.shape}")
        if not np.allclose(rho, rho.conj().T, rtol=0, atol=tolerance):
            raise InvalidState("density matrix is not Hermitian")
        if abs(np.trace(rho) - 1) > tolerance:
            raise InvalidState(f"density matrix has trace {np.trace(rho).real:.6g}")
        if np.linalg.eigvalsh(rho).min() < -tolerance:
            raise InvalidState("density matrix is not positive semidefinite")
        rho.setflags(write=False)
        object.__setattr__(self, "matrix", rho)

    @classmethod
    def from_vector(cls, psi: npt.ArrayLike) -> TwoQubitState:
        v = np.asarray(psi, dtype=np.complex128)
        v = v / np.linalg.norm(v)
        return cls(np.outer(v, v.conj()))


def partial_transpose(rho: npt.NDArray[np.complexfloating]) -> ComplexArray:
    """Transpose on the second qubit; accepts a single 4×4 matrix or a stack of them."""
    stacked = np.asarray(rho).reshape(*np.shape(rho)[:-2], 2, 2, 2, 2)
    return np.swapaxes(stacked, -3, -1).reshape(np.shape(rho))


def negativity_unnormalized(rhos: npt.NDArray[np.complexfloating]) -> npt.NDArray[np.float64]:
    """
    Twice the absolute sum of negative partial-transpose eigenvalues for a stack of (possibly
    unnormalized) states, so the result carries the weight of each state.
    """
    tolerance = LeConfigs.get("EIGEN_TOLERANCE")
    eigenvalues = np.linalg.eigvalsh(partial_transpose(rhos))
    negative = np.where(eigenvalues < -tolerance, eigenvalues, 0.0)
    return -2.0 * negative.sum(axis=-1)


def negativity(s: TwoQubitState) -> float:
    return float(negativity_unnormalized(s.matrix[None])[0])
