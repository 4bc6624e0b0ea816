# apps/stab/tableau.py
"""
Stabilizer states as 2N×N binary tableaus: the top N rows hold the Z block, the bottom N rows
the X block, and each column is one generator.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Iterable, Sequence

import numpy as np

from apps.common.exceptions import DimensionMismatch, InvalidTableau
from apps.gf2.bitmatrix import BitMatrix, hstack, rank, vstack

from .clifford import LocalCliffordLayer
from .pauli import PauliString

if TYPE_CHECKING:
    from apps.graphs.graph import Graph


@dataclass(frozen=True, eq=False)
class StabilizerTableau:
    n_qubits: int
    a: BitMatrix

    def __post_init__(self) -> None:
        n = self.n_qubits
        if self.a.shape != (2 * n, n):
            raise InvalidTableau(f"a {n}-qubit tableau must be {2 * n}x{n}, got {self.a.shape}")

    # --- construction ---
    @classmethod
    def from_blocks(cls, z: BitMatrix, x: BitMatrix) -> StabilizerTableau:
        if z.shape != x.shape:
            raise InvalidTableau(f"Z block {z.shape} and X block {x.shape} differ")
        return cls(z.rows, vstack([z, x]))

    @classmethod
    def from_paulis(cls, paulis: Sequence[PauliString]) -> StabilizerTableau:
        if not paulis:
            raise InvalidTableau("a tableau needs at least one stabilizer")
        n = paulis[0].n_qubits
        if any(p.n_qubits != n for p in paulis):
            raise InvalidTableau("stabilizers act on different qubit counts")
        z = np.stack([p.z for p in paulis], axis=1)
        x = np.stack([p.x for p in paulis], axis=1)
        return cls.from_blocks(BitMatrix.from_array(z), BitMatrix.from_array(x))

    @classmethod
    def from_labels(cls, labels: Iterable[str]) -> StabilizerTableau:
        return cls.from_paulis([PauliString.from_label(label) for label in labels])

    @classmethod
    def from_json(cls, payload: dict[str, Any]) -> StabilizerTableau:
        try:
            n = int(payload["n_qubits"])
            columns = payload["stabilizers"]
            paulis = [PauliString(np.array(s["z"]), np.array(s["x"])) for s in columns]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidTableau(f"malformed tableau JSON: {exc}") from exc
        if len(paulis) != n or any(p.n_qubits != n for p in paulis):
            raise InvalidTableau(f"expected {n} stabilizers on {n} qubits")
        return cls.from_paulis(paulis)

    def to_json(self) -> dict[str, Any]:
        return {
            "n_qubits": self.n_qubits,
            "stabilizers": [
                {"z": s.z.astype(int).tolist(), "x": s.x.astype(int).tolist()}
                for s in self.stabilizers()
            ],
        }

    # --- access ---
    @property
    def z_block(self) -> BitMatrix:
        return self.a.take_rows(range(self.n_qubits))

    @property
    def x_block(self) -> BitMatrix:
        return self.a.take_rows(range(self.n_qubits, 2 * self.n_qubits))

    def stabilizer(self, j: int) -> PauliString:
        column = self.a.take_cols([j]).to_array()[:, 0]
        return PauliString(column[: self.n_qubits], column[self.n_qubits :])

    def stabilizers(self) -> list[PauliString]:
        dense = self.a.to_array()
        n = self.n_qubits
        return [PauliString(dense[:n, j], dense[n:, j]) for j in range(n)]

    def recombined(self, r: BitMatrix) -> StabilizerTableau:
        """Right-multiplies by ``r``: every new column is a product of old generators."""
        return StabilizerTableau(self.n_qubits, self.a @ r)


def check_valid(t: StabilizerTableau) -> bool:
    """True iff the generators are independent and mutually commuting."""
    if rank(t.a) != t.n_qubits:
        return False
    z = t.z_block.to_array().astype(np.int64)
    x = t.x_block.to_array().astype(np.int64)
    return not ((z.T @ x + x.T @ z) & 1).any()


def apply_local_clifford(t: StabilizerTableau, u: LocalCliffordLayer) -> StabilizerTableau:
    if u.n_qubits != t.n_qubits:
        raise DimensionMismatch(f"layer on {u.n_qubits} qubits, tableau on {t.n_qubits}")
    z, x = u.apply_bits(t.z_block.to_array(), t.x_block.to_array())
    return StabilizerTableau.from_blocks(BitMatrix.from_array(z), BitMatrix.from_array(x))


def graph_to_tableau(g: Graph) -> StabilizerTableau:
    """Generators X_i ⊗ Z_{N(i)}, i.e. the tableau [Γ; I]."""
    return StabilizerTableau.from_blocks(g.adjacency, BitMatrix.identity(g.n))


def tableau_equivalent(t1: StabilizerTableau, t2: StabilizerTableau) -> bool:
    """True iff both tableaus generate the same stabilizer group (equal column spans)."""
    if t1.n_qubits != t2.n_qubits:
        return False
    r1 = rank(t1.a)
    return r1 == rank(t2.a) == rank(hstack([t1.a, t2.a]))
