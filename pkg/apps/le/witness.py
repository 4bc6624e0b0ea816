# apps/le/witness.py
"""
Witness-based lower bound.

For a witness built from S^x and S^z the local witness on (a, b) is
W = (I − S^x − S^z − S^x·S^z) / 4, whose expectation ω gives the bound −2ω, i.e.
(ω_x + ω_z + ω_xz − 1) / 2 in terms of the three stabilizer expectations.
"""
from __future__ import annotations

import numpy as np
import structlog

from apps.codes.witness import WitnessConstruction, witness_conditions_hold
from apps.common.enums import Pauli
from apps.common.exceptions import DimensionMismatch, InvalidWitness
from apps.noise.channels import NoiseModel
from apps.noise.expectation import stabilizer_expectation
from apps.stab.dense import apply_pauli, pauli_matrix
from apps.stab.tableau import StabilizerTableau

from .dense import EIGENBASES, noisy_region_state

logger = structlog.get_logger(__name__)


def _check(w: WitnessConstruction, n: int) -> None:
    if w.n_qubits != n:
        raise DimensionMismatch(f"witness on {w.n_qubits} qubits, noise on {n}")
    if not witness_conditions_hold(w.sx, w.sz, w.pair):
        raise InvalidWitness(f"operators do not localize a Bell pair on {w.pair}")


def witness_expectations(w: WitnessConstruction, m: NoiseModel) -> tuple[float, float, float]:
    """(ω_x, ω_z, ω_xz) under the noise ``m``."""
    _check(w, m.n_qubits)
    return (
        stabilizer_expectation(w.sx, m),
        stabilizer_expectation(w.sz, m),
        stabilizer_expectation(w.sxz, m),
    )


def wlb(w: WitnessConstruction, m: NoiseModel) -> float:
    omega_x, omega_z, omega_xz = witness_expectations(w, m)
    raw = 0.5 * (omega_x + omega_z + omega_xz - 1.0)
    if raw < 0:
        logger.debug("witness bound clamped", raw=raw, pair=w.pair)
    return max(0.0, raw)


def witness_decomposition_check(
    w: WitnessConstruction, t: StabilizerTableau, m: NoiseModel
) -> tuple[float, float]:
    """
    Witness expectation computed twice on the dense noisy state of the witness region: directly,
    and as the outcome-weighted sum of the conditional two-qubit witnesses left after measuring
    the rest of the region in the bases the witness fixes.
    """
    _check(w, m.n_qubits)
    if t.n_qubits != m.n_qubits:
        raise DimensionMismatch(f"state on {t.n_qubits} qubits, noise on {m.n_qubits}")
    a, b = w.pair
    measured = sorted(w.region)
    order = measured + [a, b]
    rho = noisy_region_state(t, m, order)

    sx, sz = w.sx.restrict(order), w.sz.restrict(order)
    trace_x = np.trace(apply_pauli(rho, sx))
    trace_z = np.trace(apply_pauli(rho, sz))
    trace_xz = np.trace(apply_pauli(apply_pauli(rho, sz), sx))
    lhs = float(np.real(np.trace(rho) - trace_x - trace_z - trace_xz)) / 4

    bases = {k: sx[k] if sx[k] is not Pauli.I else sz[k] for k in range(len(measured))}
    n_region = len(order)
    tensor = rho.reshape((2,) * (2 * n_region))
    for k, pauli in bases.items():
        basis = EIGENBASES[pauli]
        tensor = np.moveaxis(np.tensordot(basis, tensor, axes=([1], [k])), 0, k)
        col = n_region + k
        tensor = np.moveaxis(np.tensordot(basis.conj(), tensor, axes=([1], [col])), 0, col)
    outcomes = 2 ** len(measured)
    blocks = tensor.reshape(outcomes, 4, outcomes, 4)
    conditional = np.einsum("kakb->kab", blocks)

    bits = (np.arange(outcomes)[:, None] >> np.arange(len(measured))[::-1]) & 1
    x_mask = np.array([sx[k] is not Pauli.I for k in range(len(measured))], dtype=bool)
    z_mask = np.array([sz[k] is not Pauli.I for k in range(len(measured))], dtype=bool)
    sign_x = 1 - 2 * (bits[:, x_mask].sum(axis=1) % 2)
    sign_z = 1 - 2 * (bits[:, z_mask].sum(axis=1) % 2)

    pair_x = pauli_matrix(w.sx.restrict([a, b]))
    pair_z = pauli_matrix(w.sz.restrict([a, b]))
    traces = np.einsum("kaa->k", conditional)
    local_x = np.einsum("ab,kba->k", pair_x, conditional)
    local_z = np.einsum("ab,kba->k", pair_z, conditional)
    local_xz = np.einsum("ab,kba->k", pair_x @ pair_z, conditional)
    rhs = float(
        np.real(
            np.sum(traces - sign_x * local_x - sign_z * local_z - sign_x * sign_z * local_xz)
        )
        / 4
    )
    logger.debug("witness decomposition", pair=w.pair, lhs=lhs, rhs=rhs)
    return lhs, rhs
