# apps/stab/clifford.py
"""
Phase-free single-qubit Clifford layers in the binary picture.

Each qubit carries a full-rank 2×2 GF(2) matrix acting on its (z, x) column; the six such
matrices are the axis permutations of {X, Y, Z}.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np
import numpy.typing as npt

from apps.common.enums import Pauli
from apps.common.exceptions import DimensionMismatch

Matrix2 = npt.NDArray[np.uint8]

IDENTITY = np.array([[1, 0], [0, 1]], dtype=np.uint8)
HADAMARD = np.array([[0, 1], [1, 0]], dtype=np.uint8)
# exp(iπZ/4): fixes Z, swaps X and Y
U_Z = np.array([[1, 1], [0, 1]], dtype=np.uint8)
# exp(-iπX/4): fixes X, swaps Y and Z
U_X = np.array([[1, 0], [1, 1]], dtype=np.uint8)

_AXES = (Pauli.X, Pauli.Y, Pauli.Z)


def _det(m: Matrix2) -> int:
    return int(m[0, 0] * m[1, 1] + m[0, 1] * m[1, 0]) & 1


def map_axis(m: Matrix2, pauli: Pauli) -> Pauli:
    z, x = pauli.to_bits()
    image = (m.astype(np.int64) @ np.array([z, x])) & 1
    return Pauli.from_bits(int(image[0]), int(image[1]))


def inverse2(m: Matrix2) -> Matrix2:
    # over GF(2) the adjugate of an invertible 2×2 matrix is its inverse
    return np.array([[m[1, 1], m[0, 1]], [m[1, 0], m[0, 0]]], dtype=np.uint8)


@dataclass(frozen=True, eq=False)
class LocalCliffordLayer:
    """Tensor product of single-qubit Cliffords, stored as an (N, 2, 2) array."""

    matrices: npt.NDArray[np.uint8]

    def __post_init__(self) -> None:
        mats = np.asarray(self.matrices, dtype=np.uint8) & 1
        if mats.ndim != 3 or mats.shape[1:] != (2, 2):
            raise ValueError("LocalCliffordLayer needs an (N, 2, 2) array.")
        singular = [i for i in range(mats.shape[0]) if _det(mats[i]) == 0]
        if singular:
            raise ValueError(f"Per-qubit matrices must be invertible; qubits {singular} are not.")
        mats.setflags(write=False)
        object.__setattr__(self, "matrices", mats)

    @classmethod
    def identity(cls, n: int) -> LocalCliffordLayer:
        return cls(np.tile(IDENTITY, (n, 1, 1)))

    @classmethod
    def on_qubits(cls, n: int, gates: Mapping[int, Matrix2]) -> LocalCliffordLayer:
        mats = np.tile(IDENTITY, (n, 1, 1))
        for qubit, gate in gates.items():
            mats[qubit] = gate
        return cls(mats)

    @property
    def n_qubits(self) -> int:
        return int(self.matrices.shape[0])

    def __getitem__(self, i: int) -> Matrix2:
        return self.matrices[i]

    def then(self, later: LocalCliffordLayer) -> LocalCliffordLayer:
        """Layer equal to applying ``self`` first and ``later`` second."""
        if later.n_qubits != self.n_qubits:
            raise DimensionMismatch(f"cannot compose {self.n_qubits} and {later.n_qubits} qubits")
        product = np.einsum("nij,njk->nik", later.matrices.astype(np.int64), self.matrices)
        return LocalCliffordLayer(product & 1)

    def inverse(self) -> LocalCliffordLayer:
        return LocalCliffordLayer(np.stack([inverse2(m) for m in self.matrices]))

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.matrices, np.tile(IDENTITY, (self.n_qubits, 1, 1))))

    def nontrivial_qubits(self) -> list[int]:
        return [i for i in range(self.n_qubits) if not np.array_equal(self.matrices[i], IDENTITY)]

    def map_pauli(self, qubit: int, pauli: Pauli) -> Pauli:
        return map_axis(self.matrices[qubit], pauli)

    def labels(self) -> list[str]:
        """Per-qubit images of (X, Y, Z), e.g. "ZYX" for a Hadamard."""
        return [
            "".join(map_axis(m, axis).value for axis in _AXES) for m in self.matrices
        ]

    def apply_bits(
        self, z: npt.NDArray[np.uint8], x: npt.NDArray[np.uint8]
    ) -> tuple[npt.NDArray[np.uint8], npt.NDArray[np.uint8]]:
        """
        Left-multiplies each qubit's (z, x) rows by its matrix. ``z`` and ``x`` are either
        length-N vectors or N×M blocks (one column per operator).
        """
        m = self.matrices.astype(np.int64)
        if z.ndim == 2:
            m = m[:, :, :, None]
        new_z = (m[:, 0, 0] * z + m[:, 0, 1] * x) & 1
        new_x = (m[:, 1, 0] * z + m[:, 1, 1] * x) & 1
        return new_z.astype(np.uint8), new_x.astype(np.uint8)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LocalCliffordLayer):
            return NotImplemented
        return bool(np.array_equal(self.matrices, other.matrices))
