# apps/codes/assignment.py
"""
Geometric control/target assignment for color-code tableaus.

Each plaquette needs exactly one control after recombination, so the control rows of the
qubit-by-plaquette incidence matrix P must form an invertible block P[C]. The recombined
plaquettes are the columns of P·P[C]⁻¹; column k is the composite plaquette owned by control
C[k], and in the converted graph that control links to every target of its composite plaquette.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np
import structlog

from apps.common.enums import ControlBasis, WitnessLayout
from apps.common.exceptions import (
    InputError,
    InsufficientRank,
    NoValidAssignment,
    NoValidLayout,
    NodeOutOfRange,
)
from apps.gf2.bitmatrix import BitMatrix, independent_rows, invert
from apps.graphs.paths import SeedLike, as_generator
from apps.stab.configs import StabConfigs
from apps.stab.conversion import GraphConversionResult, stab_to_graph

from .lattice import ColorCodeLattice
from .logical import logical_plus_tableau
from .witness import witness_plaquette_paths

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class ControlAssignment:
    controls: tuple[int, ...]
    targets: tuple[int, ...]
    recombination: BitMatrix

    def composite_plaquette(self, lattice: ColorCodeLattice, control: int) -> frozenset[int]:
        """Qubits of the recombined plaquette owned by ``control``."""
        k = self.controls.index(control)
        column = (lattice.check_matrix.T @ self.recombination).to_array()[:, k]
        return frozenset(int(q) for q in np.flatnonzero(column))


def private_qubits(lattice: ColorCodeLattice) -> list[int]:
    """Smallest qubit owned by a single plaquette, for every plaquette that has one."""
    owners = lattice.qubit_plaquettes
    chosen = []
    for k, p in enumerate(lattice.plaquettes):
        private = [q for q in p.qubits if owners[q] == (k,)]
        if private:
            chosen.append(private[0])
    return chosen


def _assignment(incidence: BitMatrix, order: Sequence[int]) -> ControlAssignment:
    n_plaquettes = incidence.cols
    picked = independent_rows(incidence.take_rows(order), n_plaquettes)
    controls = sorted(order[i] for i in picked)
    targets = sorted(set(range(incidence.rows)) - set(controls))
    recombination = invert(incidence.take_rows(controls))
    return ControlAssignment(tuple(controls), tuple(targets), recombination)


def _strips(lattice: ColorCodeLattice, a: int, b: int) -> list[frozenset[int]]:
    """
    Supports of the plaquette strips on either side of a shortest lattice path from ``a`` to
    ``b``, smallest first. Each holds both endpoints.
    """
    strips: set[frozenset[int]] = set()
    for layout in WitnessLayout:
        try:
            w = witness_plaquette_paths(lattice, a, b, layout)
        except (NoValidLayout, InputError):
            continue
        strips.update((w.sx.support, w.sz.support))
    return sorted(strips, key=lambda s: (len(s), sorted(s)))


def _forced_orders(
    lattice: ColorCodeLattice, a: int, b: int, rng: np.random.Generator
) -> Iterator[list[int]]:
    n = lattice.n_qubits
    privates = private_qubits(lattice)
    # a alone in a plaquette shared with b makes that plaquette its own composite
    for face in lattice.link_faces(a, b):
        blocked = set(lattice.plaquettes[face].qubits) - {a}
        rest = [q for q in privates + list(range(n)) if q not in blocked and q != a]
        yield [a] + list(dict.fromkeys(rest))
    # likewise a strip whose only control is a becomes a's composite
    for strip in _strips(lattice, a, b):
        yield [a] + [int(q) for q in rng.permutation(n) if q not in strip]
    while True:
        rest = [int(q) for q in rng.permutation(n) if q not in (a, b)]
        yield [a] + rest


def assign_controls_geometric(
    lattice: ColorCodeLattice,
    seed: SeedLike | None = None,
    forced_pair: tuple[int, int] | None = None,
) -> ControlAssignment:
    """
    Picks one control per plaquette.

    Without a seed, every plaquette with a private qubit contributes its smallest one and
    the remaining controls follow greedily in label order. A seed shuffles the greedy order.
    ``forced_pair=(a, b)`` makes ``a`` a control whose composite plaquette contains the target
    ``b``: a plaquette shared with ``b`` when there is one, else the plaquette strip along a
    shortest lattice path to ``b``, with the remaining controls drawn outside it. Random orders
    are the last resort.
    """
    incidence = lattice.check_matrix.T
    n = lattice.n_qubits

    if forced_pair is None:
        if seed is None:
            privates = private_qubits(lattice)
            order = privates + [q for q in range(n) if q not in set(privates)]
        else:
            order = [int(q) for q in as_generator(seed).permutation(n)]
        return _assignment(incidence, order)

    a, b = forced_pair
    for q in (a, b):
        if not 0 <= q < n:
            raise NodeOutOfRange(f"qubit {q} outside a lattice of {n}")
    attempts = StabConfigs.get("FORCED_PAIR_ATTEMPTS")
    rng = as_generator(seed if seed is not None else 0)
    orders = _forced_orders(lattice, a, b, rng)
    for attempt in range(attempts):
        order = next(orders)
        try:
            assignment = _assignment(incidence, order)
        except InsufficientRank:
            continue
        if a in assignment.controls and b in assignment.composite_plaquette(lattice, a):
            logger.debug("forced pair assigned", pair=(a, b), attempt=attempt)
            return assignment
    logger.warning("forced pair not assignable", pair=(a, b), attempts=attempts)
    raise NoValidAssignment(f"no geometric assignment links qubits {a} and {b}")


def code_conversion(
    lattice: ColorCodeLattice,
    seed: SeedLike | None = None,
    forced_pair: tuple[int, int] | None = None,
) -> GraphConversionResult:
    """Graph of |+>_L with geometric controls; Hadamards land on the controls."""
    assignment = assign_controls_geometric(lattice, seed=seed, forced_pair=forced_pair)
    return stab_to_graph(
        logical_plus_tableau(lattice),
        control_basis=ControlBasis.Z,
        controls=assignment.controls,
    )


def assignment_for_controls(
    lattice: ColorCodeLattice, controls: Sequence[int]
) -> ControlAssignment:
    """Assignment for an explicit control set; raises NoValidAssignment if P[C] is singular."""
    incidence = lattice.check_matrix.T
    if len(set(controls)) != incidence.cols:
        raise NoValidAssignment(f"{incidence.cols} controls required, {len(set(controls))} given")
    try:
        return _assignment(incidence, sorted(set(controls)))
    except InsufficientRank as exc:
        raise NoValidAssignment(f"controls {sorted(controls)} do not cover the plaquettes") from exc
