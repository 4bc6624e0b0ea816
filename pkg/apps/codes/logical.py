# apps/codes/logical.py
from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

from apps.common.enums import Pauli
from apps.common.exceptions import InconsistentLattice, Singular
from apps.gf2.bitmatrix import BitMatrix, independent_rows, invert, nullspace, rank, vstack
from apps.stab.pauli import PauliString
from apps.stab.tableau import StabilizerTableau, check_valid

if TYPE_CHECKING:
    from .lattice import ColorCodeLattice


def logical_operators(check: BitMatrix) -> tuple[BitMatrix, BitMatrix]:
    """
    Logical X and Z supports of a self-dual CSS code, one row per logical qubit, paired so that
    X_i and Z_j overlap oddly iff i == j.
    """
    kernel = nullspace(check).T
    if kernel.rows == rank(check):
        return BitMatrix.zeros(0, check.cols), BitMatrix.zeros(0, check.cols)
    # kernel rows outside the plaquette span, taken greedily after the plaquettes themselves
    stacked = vstack([check, kernel])
    picked = independent_rows(stacked, kernel.rows)
    logical_x = stacked.take_rows(i for i in picked if i >= check.rows)
    try:
        pairing = invert(logical_x @ logical_x.T)
    except Singular as exc:
        raise InconsistentLattice("logical operators do not pair up") from exc
    return logical_x, pairing @ logical_x


def logical_plus_tableau(lattice: ColorCodeLattice) -> StabilizerTableau:
    """X plaquettes, Z plaquettes and one logical X string per logical qubit."""
    n = lattice.n_qubits
    logical_x, _ = logical_operators(lattice.check_matrix)
    columns = [PauliString.from_support(n, p.qubits, Pauli.X) for p in lattice.plaquettes]
    columns += [PauliString.from_support(n, p.qubits, Pauli.Z) for p in lattice.plaquettes]
    columns += [
        PauliString.from_support(n, np.flatnonzero(row), Pauli.X) for row in logical_x.to_array()
    ]
    if len(columns) != n:
        raise InconsistentLattice(f"{len(columns)} generators for {n} qubits")
    tableau = StabilizerTableau.from_paulis(columns)
    if not check_valid(tableau):
        raise InconsistentLattice("plaquette and logical operators are dependent or anticommute")
    return tableau
