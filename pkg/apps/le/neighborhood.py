# apps/le/neighborhood.py
"""
Measurement-based bound on a graph state measured in Z outside a linked pair (a, b).

After the measurements the pair holds a Bell-type state fixed up to Z_a^s Z_b^t. Every error
that matters shifts (s, t): an error on a or b through the pair stabilizers X_a Z_b and Z_a X_b,
and an X or Y error on a measured neighbor through the outcome it flips. The four shifted states
are orthogonal, so the conditional state is Bell-diagonal with weights p and its negativity is
max(0, 2·max(p) − 1) for every outcome.
"""
from __future__ import annotations

import numpy as np
import numpy.typing as npt
import structlog

from apps.common.enums import Pauli
from apps.common.exceptions import DimensionMismatch, LinkMissing
from apps.graphs.graph import Graph
from apps.noise.channels import NoiseModel

from .types import MlbResult

logger = structlog.get_logger(__name__)

# (s, t) shift of Z_a^s Z_b^t caused by each error on a, resp. b
_SHIFT_A = {Pauli.X: (0, 1), Pauli.Y: (1, 1), Pauli.Z: (1, 0)}
_SHIFT_B = {Pauli.X: (1, 0), Pauli.Y: (1, 1), Pauli.Z: (0, 1)}


def _check_link(g: Graph, a: int, b: int, m: NoiseModel) -> None:
    g.check_node(a)
    g.check_node(b)
    if m.n_qubits != g.n:
        raise DimensionMismatch(f"noise on {m.n_qubits} qubits, graph on {g.n}")
    if not g.has_edge(a, b):
        raise LinkMissing(f"qubits {a} and {b} are not linked")


def relevant_neighborhood(
    g: Graph, a: int, b: int, m: NoiseModel
) -> tuple[frozenset[int], int]:
    """Measured neighbors of a or b whose noise can flip a Z outcome."""
    _check_link(g, a, b, m)
    around = (set(g.neighbors(a)) | set(g.neighbors(b))) - {a, b}
    relevant = frozenset(q for q in around if m.flip_probability(q) > 0)
    return relevant, len(relevant)


def _convolve(p: npt.NDArray[np.float64], shifts: dict[tuple[int, int], float]) -> npt.NDArray:
    """p over Z2×Z2 convolved with a distribution given as {shift: probability}."""
    out = np.zeros_like(p)
    for (s, t), weight in shifts.items():
        if weight:
            out += weight * np.roll(p, shift=(s, t), axis=(0, 1))
    return out


def bell_weights(g: Graph, a: int, b: int, m: NoiseModel) -> npt.NDArray[np.float64]:
    """Weights of the four Z_a^s Z_b^t-shifted Bell-type states, indexed [s, t]."""
    relevant, _ = relevant_neighborhood(g, a, b, m)
    p = np.zeros((2, 2))
    p[0, 0] = 1.0
    for qubit, table in ((a, _SHIFT_A), (b, _SHIFT_B)):
        shifts = {(0, 0): m.probability(qubit, Pauli.I)}
        for pauli, shift in table.items():
            shifts[shift] = shifts.get(shift, 0.0) + m.probability(qubit, pauli)
        p = _convolve(p, shifts)
    neighbors_a, neighbors_b = set(g.neighbors(a)), set(g.neighbors(b))
    for q in sorted(relevant):
        flip = m.flip_probability(q)
        shift = (int(q in neighbors_a), int(q in neighbors_b))
        p = _convolve(p, {(0, 0): 1.0 - flip, shift: flip})
    return p


def mlb_neighborhood_value(g: Graph, a: int, b: int, m: NoiseModel) -> float:
    p = bell_weights(g, a, b, m)
    return float(max(0.0, 2.0 * p.max() - 1.0))


def mlb_neighborhood(g: Graph, a: int, b: int, m: NoiseModel) -> MlbResult:
    """Exact average negativity with Z measurements everywhere outside (a, b)."""
    _, n = relevant_neighborhood(g, a, b, m)
    value = mlb_neighborhood_value(g, a, b, m)
    logger.debug("neighborhood bound", pair=(a, b), n=n, value=value)
    return MlbResult(
        value=value,
        setting={q: Pauli.Z for q in range(g.n) if q not in (a, b)},
        n=n,
        pair=(a, b),
    )
