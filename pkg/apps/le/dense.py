# apps/le/dense.py
"""
Exact measurement-based bounds by statevector contraction.

The noisy state is never formed. Pauli noise on a measured qubit only flips that qubit's outcome
with the probability of anticommuting with the measured axis, and noise on a and b commutes with
the measurements elsewhere, so the average negativity follows from the noiseless amplitudes: the
conditional (a, b) states are mixed over outcome flips, then the (a, b) channels are applied.
"""
from __future__ import annotations

from itertools import product
from typing import Mapping

import numpy as np
import numpy.typing as npt
import structlog

from apps.common.enums import Pauli
from apps.common.exceptions import DimensionMismatch, InputError, NodeOutOfRange, TooLarge
from apps.noise.channels import NoiseModel
from apps.stab.dense import stabilizer_state
from apps.stab.tableau import StabilizerTableau

from .configs import LeConfigs
from .negativity import negativity_unnormalized

logger = structlog.get_logger(__name__)

ComplexArray = npt.NDArray[np.complex128]
Setting = Mapping[int, Pauli]

_SQRT_HALF = 1 / np.sqrt(2)
# rows are the conjugated eigenvectors, +1 eigenvalue first
EIGENBASES: dict[Pauli, ComplexArray] = {
    Pauli.Z: np.eye(2, dtype=np.complex128),
    Pauli.X: _SQRT_HALF * np.array([[1, 1], [1, -1]], dtype=np.complex128),
    Pauli.Y: _SQRT_HALF * np.array([[1, -1j], [1, 1j]], dtype=np.complex128),
}
_MEASURABLE = (Pauli.X, Pauli.Y, Pauli.Z)


def all_z_setting(n: int, a: int, b: int) -> dict[int, Pauli]:
    return {q: Pauli.Z for q in range(n) if q not in (a, b)}


def check_pair(n: int, a: int, b: int) -> None:
    for q in (a, b):
        if not 0 <= q < n:
            raise NodeOutOfRange(f"qubit {q} outside [0, {n})")
    if a == b:
        raise InputError(f"the pair must name two distinct qubits, got ({a}, {b})")


def check_setting(n: int, a: int, b: int, setting: Setting) -> None:
    expected = set(range(n)) - {a, b}
    if set(setting) != expected:
        raise InputError("the setting must cover exactly the qubits outside the pair")
    if any(p not in _MEASURABLE for p in setting.values()):
        raise InputError("every measured qubit needs an X, Y or Z basis")


def apply_pauli_channel(
    rho: npt.NDArray[np.complexfloating], probabilities: npt.NDArray[np.float64]
) -> ComplexArray:
    """
    Uncorrelated Pauli noise on a stack of r-qubit density matrices (..., 2^r, 2^r); row i of
    ``probabilities`` is the (I, X, Y, Z) vector of qubit i.
    """
    r = probabilities.shape[0]
    lead = np.shape(rho)[:-2]
    tensor = np.asarray(rho, dtype=np.complex128).reshape(lead + (2,) * (2 * r))
    signs = np.array([1.0, -1.0])
    for i, (q0, q1, q2, q3) in enumerate(probabilities):
        if q0 == 1.0:
            continue
        row, col = len(lead) + i, len(lead) + r + i
        parity = (signs[:, None] * signs[None, :]).reshape(
            [2 if k in (row, col) else 1 for k in range(tensor.ndim)]
        )
        z_part = tensor * parity
        x_part = np.flip(tensor, axis=(row, col))
        y_part = np.flip(z_part, axis=(row, col))
        tensor = q0 * tensor + q1 * x_part + q2 * y_part + q3 * z_part
    return tensor.reshape(np.shape(rho))


def rotate_to_bases(
    state: ComplexArray, n: int, order: list[int], bases: Mapping[int, Pauli]
) -> ComplexArray:
    """Statevector with the qubits of ``bases`` turned into their eigenbases, axes in ``order``."""
    tensor = state.reshape((2,) * n)
    for q, pauli in bases.items():
        tensor = np.moveaxis(np.tensordot(EIGENBASES[pauli], tensor, axes=([1], [q])), 0, q)
    return np.transpose(tensor, order + [q for q in range(n) if q not in order])


def conditional_states(
    state: ComplexArray, n: int, a: int, b: int, setting: Setting
) -> ComplexArray:
    """Unnormalized pure (a, b) states, one per outcome pattern of the measured qubits."""
    measured = sorted(setting)
    amplitudes = rotate_to_bases(state, n, measured + [a, b], setting)
    return amplitudes.reshape(2 ** len(measured), 4)


def average_negativity(
    amplitudes: ComplexArray, a: int, b: int, m: NoiseModel, setting: Setting
) -> float:
    measured = sorted(setting)
    rhos = np.einsum("ki,kj->kij", amplitudes, amplitudes.conj())
    rhos = rhos.reshape((2,) * len(measured) + (4, 4))
    for axis, q in enumerate(measured):
        flip = m.anticommuting_probability(q, setting[q])
        if flip > 0:
            rhos = (1 - flip) * rhos + flip * np.flip(rhos, axis=axis)
    rhos = apply_pauli_channel(rhos.reshape(-1, 4, 4), m.probabilities[[a, b]])
    return float(negativity_unnormalized(rhos).sum())


def _prepare(t: StabilizerTableau, a: int, b: int, m: NoiseModel, limit: int) -> ComplexArray:
    n = t.n_qubits
    if n > limit:
        raise TooLarge(f"dense evaluation limited to {limit} qubits, got {n}")
    if m.n_qubits != n:
        raise DimensionMismatch(f"noise on {m.n_qubits} qubits, state on {n}")
    check_pair(n, a, b)
    return stabilizer_state(t)


def mlb_dense(
    t: StabilizerTableau,
    a: int,
    b: int,
    m: NoiseModel,
    setting: Setting | None = None,
) -> float:
    """Average negativity on (a, b) after measuring every other qubit in ``setting`` (all Z)."""
    state = _prepare(t, a, b, m, LeConfigs.get("DENSE_MAX_QUBITS"))
    n = t.n_qubits
    setting = all_z_setting(n, a, b) if setting is None else setting
    check_setting(n, a, b, setting)
    return average_negativity(conditional_states(state, n, a, b, setting), a, b, m, setting)


def rle_exhaustive(
    t: StabilizerTableau, a: int, b: int, m: NoiseModel
) -> tuple[float, dict[int, Pauli]]:
    """Best average negativity over all 3^(N-2) Pauli settings, with a setting reaching it."""
    state = _prepare(t, a, b, m, LeConfigs.get("RLE_MAX_QUBITS"))
    n = t.n_qubits
    measured = [q for q in range(n) if q not in (a, b)]
    best_value, best_setting = -1.0, {}
    for axes in product(_MEASURABLE, repeat=len(measured)):
        setting = dict(zip(measured, axes))
        value = average_negativity(conditional_states(state, n, a, b, setting), a, b, m, setting)
        if value > best_value + 1e-15:
            best_value, best_setting = value, setting
    logger.debug("exhaustive settings scanned", n_settings=3 ** len(measured), value=best_value)
    return best_value, best_setting


def noisy_region_state(t: StabilizerTableau, m: NoiseModel, order: list[int]) -> ComplexArray:
    """Reduced density matrix of the qubits in ``order`` after the noise, axes in that order."""
    n = t.n_qubits
    limit = LeConfigs.get("DENSITY_MAX_QUBITS")
    if len(order) > limit:
        raise TooLarge(f"dense region limited to {limit} qubits, got {len(order)}")
    if n > LeConfigs.get("DENSE_MAX_QUBITS"):
        raise TooLarge(f"dense statevector limited to {LeConfigs.get('DENSE_MAX_QUBITS')} qubits")
    state = stabilizer_state(t)
    amplitudes = rotate_to_bases(state, n, order, {}).reshape(2 ** len(order), -1)
    rho = amplitudes @ amplitudes.conj().T
    return apply_pauli_channel(rho, m.probabilities[order])
