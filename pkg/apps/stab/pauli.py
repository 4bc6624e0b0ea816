from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np
import numpy.typing as npt

from apps.common.enums import Pauli


@dataclass(frozen=True, eq=False)
class PauliString:
    """
    Phase-free N-qubit Pauli operator in the binary picture.
    Qubit i carries the pair (z[i], x[i]): (0,0)=I, (0,1)=X, (1,1)=Y, (1,0)=Z.
    """

    z: npt.NDArray[np.uint8]
    x: npt.NDArray[np.uint8]

    def __post_init__(self) -> None:
        z = np.asarray(self.z, dtype=np.uint8) & 1
        x = np.asarray(self.x, dtype=np.uint8) & 1
        if z.ndim != 1 or z.shape != x.shape:
            raise ValueError("PauliString needs z and x bit vectors of equal length.")
        z.setflags(write=False)
        x.setflags(write=False)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "x", x)

    @classmethod
    def from_label(cls, label: str) -> PauliString:
        bits = [Pauli(ch).to_bits() for ch in label.upper()]
        return cls(np.array([b[0] for b in bits]), np.array([b[1] for b in bits]))

    @classmethod
    def from_support(cls, n: int, qubits: Iterable[int], pauli: Pauli) -> PauliString:
        z = np.zeros(n, dtype=np.uint8)
        x = np.zeros(n, dtype=np.uint8)
        idx = list(qubits)
        zb, xb = pauli.to_bits()
        z[idx] = zb
        x[idx] = xb
        return cls(z, x)

    @classmethod
    def identity(cls, n: int) -> PauliString:
        return cls(np.zeros(n, dtype=np.uint8), np.zeros(n, dtype=np.uint8))

    @property
    def n_qubits(self) -> int:
        return int(self.z.shape[0])

    def __len__(self) -> int:
        return self.n_qubits

    def __getitem__(self, i: int) -> Pauli:
        return Pauli.from_bits(int(self.z[i]), int(self.x[i]))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(int(i) for i in np.flatnonzero(self.z | self.x))

    @property
    def weight(self) -> int:
        return int(np.count_nonzero(self.z | self.x))

    def label(self) -> str:
        return "".join(self[i].value for i in range(self.n_qubits))

    def commutes(self, other: PauliString) -> bool:
        return not int(np.sum(self.z & other.x) + np.sum(self.x & other.z)) & 1

    def __mul__(self, other: PauliString) -> PauliString:
        return PauliString(self.z ^ other.z, self.x ^ other.x)

    def restrict(self, qubits: Iterable[int]) -> PauliString:
        idx = list(qubits)
        return PauliString(self.z[idx], self.x[idx])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PauliString):
            return NotImplemented
        return bool(np.array_equal(self.z, other.z) and np.array_equal(self.x, other.x))

    def __hash__(self) -> int:
        return hash((self.z.tobytes(), self.x.tobytes()))

    def __repr__(self) -> str:
        return f"PauliString({self.label()!r})"
