# apps/stab/conversion.py
"""
Stabilizer-to-graph conversion in the binary picture.

Given a valid tableau A = [Z; X], the conversion finds a local Clifford layer Q and an invertible
recombination R such that Q·A·R = [Γ; I]. The steps are:

1. Column elimination on the X block splits A into an X-bearing left part (rank n) and a
   pure-Z right part.
2. n independent rows of the left X block become the controls; the remaining qubits are targets.
3. Hadamards on the targets interchange their Z and X rows.
4. A block lower-triangular recombination turns the X block into the identity, leaving
   Γ = [[C, Bᵀ], [B, 0]] with B = X_{l,t}·X_{l,c}⁻¹.
5. U_Z on every control with C_ii = 1 clears the diagonal.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Sequence

import numpy as np
import structlog

from apps.common.enums import ControlBasis
from apps.common.exceptions import (
    InsufficientRank,
    InvalidTableau,
    NoValidAssignment,
    Singular,
)
from apps.graphs.graph import Graph
from apps.gf2.bitmatrix import BitMatrix, column_reduce, independent_rows, invert

from .clifford import HADAMARD, U_Z, LocalCliffordLayer
from .configs import StabConfigs
from .tableau import StabilizerTableau, apply_local_clifford, check_valid

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class GraphConversionResult:
    gamma: BitMatrix
    controls: tuple[int, ...]
    targets: tuple[int, ...]
    unitary: LocalCliffordLayer
    recombination: BitMatrix

    def __post_init__(self) -> None:
        dense = self.gamma.to_array()
        if not np.array_equal(dense, dense.T) or dense.diagonal().any():
            raise ValueError("gamma must be symmetric with a zero diagonal")
        if set(self.controls) & set(self.targets):
            raise ValueError("controls and targets overlap")
        if len(self.controls) + len(self.targets) != self.gamma.rows:
            raise ValueError("controls and targets must cover every qubit")

    @property
    def graph(self) -> Graph:
        return Graph(self.gamma)


def _select_controls(
    x_left: BitMatrix,
    n_controls: int,
    rng: np.random.Generator | None,
    first: int | None = None,
    excluded: int | None = None,
) -> list[int]:
    order = list(range(x_left.rows))
    if rng is not None:
        order = [int(i) for i in rng.permutation(order)]
    if excluded is not None:
        order.remove(excluded)
    if first is not None:
        order.remove(first)
        order.insert(0, first)
    chosen = independent_rows(x_left.take_rows(order), n_controls)
    return sorted(order[i] for i in chosen)


def _convert_with_controls(
    t: StabilizerTableau,
    controls: Sequence[int],
    reduction: BitMatrix,
    n_left: int,
) -> GraphConversionResult:
    n = t.n_qubits
    controls = sorted(controls)
    targets = [q for q in range(n) if q not in set(controls)]
    reduced = t.recombined(reduction)
    z = reduced.z_block.to_array()
    x = reduced.x_block.to_array()

    try:
        inv_xlc = invert(BitMatrix.from_array(x[np.ix_(controls, range(n_left))]))
    except Singular as exc:
        raise NoValidAssignment(f"controls {controls} do not span the X block") from exc
    try:
        inv_zrt = invert(BitMatrix.from_array(z[np.ix_(targets, range(n_left, n))]))
    except Singular as exc:
        raise InvalidTableau("target Z block is singular; the generators do not commute") from exc

    z_lt = BitMatrix.from_array(z[np.ix_(targets, range(n_left))])
    v = inv_zrt @ z_lt @ inv_xlc
    block = np.zeros((n, n), dtype=np.uint8)
    block[:n_left, :n_left] = inv_xlc.to_array()
    block[n_left:, :n_left] = v.to_array()
    block[n_left:, n_left:] = inv_zrt.to_array()
    # column k of the block form belongs to qubit order[k]
    order = controls + targets
    permutation = np.zeros((n, n), dtype=np.uint8)
    permutation[np.arange(n), order] = 1
    recombination = reduction @ BitMatrix.from_array(block) @ BitMatrix.from_array(permutation)

    hadamards = LocalCliffordLayer.on_qubits(n, {q: HADAMARD for q in targets})
    staged = apply_local_clifford(t.recombined(recombination), hadamards)
    diagonal = staged.z_block.to_array().diagonal()
    cleanup = LocalCliffordLayer.on_qubits(n, {q: U_Z for q in controls if diagonal[q]})
    unitary = hadamards.then(cleanup)
    final = apply_local_clifford(staged, cleanup)

    if final.x_block != BitMatrix.identity(n):
        raise InvalidTableau("conversion did not reach graph form")
    return GraphConversionResult(
        gamma=final.z_block,
        controls=tuple(controls),
        targets=tuple(targets),
        unitary=unitary,
        recombination=recombination,
    )


def _convert(
    t: StabilizerTableau,
    controls: Collection[int] | None,
    forced_pair: tuple[int, int] | None,
    rng: np.random.Generator | None,
) -> GraphConversionResult:
    x_reduced, reduction = column_reduce(t.x_block)
    n_left = int(np.count_nonzero(x_reduced.to_array().any(axis=0)))
    x_left = x_reduced.take_cols(range(n_left))

    if controls is not None:
        if len(set(controls)) != n_left:
            raise NoValidAssignment(f"{len(set(controls))} controls given, {n_left} required")
        return _convert_with_controls(t, list(set(controls)), reduction, n_left)

    if forced_pair is None:
        chosen = _select_controls(x_left, n_left, rng)
        return _convert_with_controls(t, chosen, reduction, n_left)

    a, b = forced_pair
    attempts = StabConfigs.get("FORCED_PAIR_ATTEMPTS")
    generator = rng if rng is not None else np.random.default_rng(0)
    for attempt in range(attempts):
        try:
            chosen = _select_controls(
                x_left, n_left, generator if attempt else None, first=a, excluded=b
            )
        except InsufficientRank:
            break
        if a not in chosen:
            break
        result = _convert_with_controls(t, chosen, reduction, n_left)
        if result.gamma.get(a, b):
            logger.debug("forced pair realized", pair=(a, b), attempt=attempt)
            return result
    logger.warning("forced pair not realized", pair=(a, b), attempts=attempts)
    raise NoValidAssignment(f"no control assignment links qubits {a} and {b}")


def stab_to_graph(
    t: StabilizerTableau,
    *,
    control_basis: ControlBasis = ControlBasis.X,
    controls: Collection[int] | None = None,
    forced_pair: tuple[int, int] | None = None,
    rng: np.random.Generator | None = None,
) -> GraphConversionResult:
    """
    Converts a valid tableau to an LC-equivalent graph state.

    With ``ControlBasis.X`` controls are drawn from the X block and targets receive Hadamards.
    With ``ControlBasis.Z`` the conversion runs on the Hadamard-dual tableau and the global
    Hadamard layer is folded into the unitary, so the Hadamards land on the controls.
    ``controls`` fixes the control set, ``rng`` randomizes the greedy row order and
    ``forced_pair=(a, b)`` asks for a control ``a`` linked to the target ``b``.
    """
    if not check_valid(t):
        raise InvalidTableau("tableau generators are dependent or do not commute")
    n = t.n_qubits
    if controls is not None and any(not 0 <= q < n for q in controls):
        raise InvalidTableau(f"control labels must lie in [0, {n})")
    if forced_pair is not None and (
        forced_pair[0] == forced_pair[1] or any(not 0 <= q < n for q in forced_pair)
    ):
        raise InvalidTableau(f"forced pair {forced_pair} must name two distinct qubits")

    if control_basis is ControlBasis.X:
        result = _convert(t, controls, forced_pair, rng)
    else:
        dual = LocalCliffordLayer.on_qubits(n, {q: HADAMARD for q in range(n)})
        inner = _convert(apply_local_clifford(t, dual), controls, forced_pair, rng)
        result = GraphConversionResult(
            gamma=inner.gamma,
            controls=inner.controls,
            targets=inner.targets,
            unitary=dual.then(inner.unitary),
            recombination=inner.recombination,
        )
    logger.debug(
        "converted tableau",
        n_qubits=n,
        n_controls=len(result.controls),
        basis=control_basis.value,
    )
    return result
