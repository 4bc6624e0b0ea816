# apps/noise/channels.py
"""
Uncorrelated single-qubit Pauli noise.

Each qubit carries a probability vector over (I, X, Y, Z). Local Cliffords only permute the
three non-trivial axes, so a conjugated channel is again Pauli noise of the same form.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt
import structlog

from apps.common.enums import NoiseKind, Pauli
from apps.common.exceptions import DimensionMismatch, OutOfRange
from apps.stab.clifford import LocalCliffordLayer, map_axis

logger = structlog.get_logger(__name__)

PROBABILITY_TOLERANCE = 1e-12
_AXES = (Pauli.I, Pauli.X, Pauli.Y, Pauli.Z)
_NONTRIVIAL = _AXES[1:]


@dataclass(frozen=True, eq=False)
class NoiseModel:
    """Per-qubit (q0, q1, q2, q3) for (I, X, Y, Z), stored as an (N, 4) array."""

    probabilities: npt.NDArray[np.float64]
    kind: NoiseKind = NoiseKind.CUSTOM
    q: float | None = None

    def __post_init__(self) -> None:
        probs = np.array(self.probabilities, dtype=np.float64)
        if probs.ndim != 2 or probs.shape[1] != 4:
            raise DimensionMismatch(f"noise needs an (N, 4) array, got shape {probs.shape}")
        if (probs < -PROBABILITY_TOLERANCE).any():
            raise OutOfRange("noise probabilities must be nonnegative")
        if not np.allclose(probs.sum(axis=1), 1.0, rtol=0, atol=PROBABILITY_TOLERANCE):
            raise OutOfRange("noise probabilities of every qubit must sum to 1")
        probs = np.clip(probs, 0.0, None)
        probs.setflags(write=False)
        object.__setattr__(self, "probabilities", probs)

    @classmethod
    def uniform(cls, vector: npt.ArrayLike, n: int) -> NoiseModel:
        return cls(np.tile(np.asarray(vector, dtype=np.float64), (n, 1)))

    @classmethod
    def noiseless(cls, n: int) -> NoiseModel:
        return cls.uniform([1.0, 0.0, 0.0, 0.0], n)

    @classmethod
    def from_json(cls, payload: dict[str, Any], n: int) -> NoiseModel:
        if "per_qubit" in payload:
            model = cls(np.array(payload["per_qubit"], dtype=np.float64))
            if model.n_qubits != n:
                raise DimensionMismatch(f"noise covers {model.n_qubits} qubits, expected {n}")
            return model
        try:
            kind = NoiseKind(payload["kind"])
            q = float(payload["q"])
        except (KeyError, ValueError) as exc:
            raise OutOfRange(f"unreadable noise description {payload!r}") from exc
        return standard_channel(kind, q, n)

    def to_json(self) -> dict[str, Any]:
        if self.kind is not NoiseKind.CUSTOM and self.q is not None:
            return {"kind": self.kind.value, "q": self.q}
        return {"per_qubit": self.probabilities.tolist()}

    @property
    def n_qubits(self) -> int:
        return int(self.probabilities.shape[0])

    def __getitem__(self, qubit: int) -> npt.NDArray[np.float64]:
        return self.probabilities[qubit]

    def probability(self, qubit: int, pauli: Pauli) -> float:
        return float(self.probabilities[qubit, pauli.index])

    def anticommuting_probability(self, qubit: int, pauli: Pauli) -> float:
        """Probability that the error on ``qubit`` anticommutes with ``pauli``."""
        if pauli is Pauli.I:
            return 0.0
        row = self.probabilities[qubit]
        # summed directly, so a channel without weight on either axis gives exactly 0
        return float(sum(row[axis.index] for axis in _NONTRIVIAL if axis is not pauli))

    def flip_probability(self, qubit: int) -> float:
        """Probability of an X or Y error, i.e. of flipping a Z-measurement outcome."""
        return self.anticommuting_probability(qubit, Pauli.Z)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NoiseModel):
            return NotImplemented
        return bool(np.allclose(self.probabilities, other.probabilities, rtol=0, atol=1e-15))

    def __repr__(self) -> str:
        if self.kind is NoiseKind.CUSTOM:
            return f"NoiseModel(custom, n={self.n_qubits})"
        return f"NoiseModel({self.kind.value}, q={self.q}, n={self.n_qubits})"


def standard_channel(kind: NoiseKind, q: float, n: int) -> NoiseModel:
    """Bit flip, phase flip, bit-phase flip or depolarizing noise of strength ``q``."""
    if not 0.0 <= q <= 1.0:
        raise OutOfRange(f"noise strength must lie in [0, 1], got {q}")
    if kind is NoiseKind.DP:
        vector = [1 - 3 * q / 4, q / 4, q / 4, q / 4]
    elif kind in (NoiseKind.BF, NoiseKind.BPF, NoiseKind.PF):
        vector = [1 - q / 2, 0.0, 0.0, 0.0]
        axis = {NoiseKind.BF: Pauli.X, NoiseKind.BPF: Pauli.Y, NoiseKind.PF: Pauli.Z}[kind]
        vector[axis.index] = q / 2
    else:
        raise OutOfRange(f"{kind.value} is not a standard channel")
    return NoiseModel(np.tile(vector, (n, 1)), kind=kind, q=q)


def transform_noise(m: NoiseModel, u: LocalCliffordLayer) -> NoiseModel:
    """Noise after conjugation by ``u``: the weight of σ moves to the image of σ."""
    if u.n_qubits != m.n_qubits:
        raise DimensionMismatch(f"noise on {m.n_qubits} qubits, layer on {u.n_qubits}")
    moved = np.zeros_like(m.probabilities)
    for qubit in range(m.n_qubits):
        for axis in _AXES:
            moved[qubit, map_axis(u[qubit], axis).index] = m.probabilities[qubit, axis.index]
    unchanged = bool(np.array_equal(moved, m.probabilities))
    return NoiseModel(
        moved,
        kind=m.kind if unchanged else NoiseKind.CUSTOM,
        q=m.q if unchanged else None,
    )
