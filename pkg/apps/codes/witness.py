# apps/codes/witness.py
"""
Local witness operators from two adjacent paths of plaquettes.

Along a shortest lattice path from a to b every link borders two plaquettes. Consecutive links
share one of them, which stays on its side; the two remaining plaquettes of the pair lie on the
other side. Multiplying the plaquettes of each side gives two operators that overlap exactly on
{a, b}: the side with the smaller support carries the X type, the other one the Z type.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import groupby

import networkx as nx
import structlog

from apps.common.enums import Pauli, WitnessLayout
from apps.common.exceptions import InputError, InvalidWitness, NoValidLayout, TooSmall
from apps.stab.pauli import PauliString

from .lattice import ColorCodeLattice

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class WitnessConstruction:
    sx: PauliString
    sz: PauliString
    pair: tuple[int, int]
    d: int
    layout: WitnessLayout = WitnessLayout.STAIRCASE
    path: tuple[int, ...] = ()
    faces_x: tuple[int, ...] = ()
    faces_z: tuple[int, ...] = ()
    n_qubits: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "n_qubits", self.sx.n_qubits)
        if not witness_conditions_hold(self.sx, self.sz, self.pair):
            raise InvalidWitness(f"operators do not localize a Bell pair on {self.pair}")

    @property
    def n_x(self) -> int:
        return self.sx.weight

    @property
    def n_z(self) -> int:
        return self.sz.weight

    @property
    def sxz(self) -> PauliString:
        return self.sx * self.sz

    @property
    def region(self) -> frozenset[int]:
        """Qubits outside {a, b} on which the witness acts."""
        return (self.sx.support | self.sz.support) - set(self.pair)


def witness_conditions_hold(sx: PauliString, sz: PauliString, pair: tuple[int, int]) -> bool:
    """
    Both operators act on a and b, their factors commute qubit by qubit outside {a, b}, and
    their restrictions to {a, b} anticommute locally on each qubit (a Bell stabilizer group).
    """
    a, b = pair
    if a == b or sx.n_qubits != sz.n_qubits:
        return False
    for q in (a, b):
        if sx[q] is Pauli.I or sz[q] is Pauli.I or sx[q] is sz[q]:
            return False
    return all(
        sx[q] is Pauli.I or sz[q] is Pauli.I or sx[q] is sz[q]
        for q in range(sx.n_qubits)
        if q not in pair
    )


def bulk_qubits(lattice: ColorCodeLattice) -> tuple[int, ...]:
    """Qubits at least D/4 links away from the boundary layer (qubits with fewer than 3 links)."""
    g = lattice.link_graph
    boundary = [q for q in g.nodes if g.degree(q) < 3]
    depth = nx.multi_source_dijkstra_path_length(g, boundary) if boundary else {}
    layers = lattice.distance // 4
    bulk = tuple(q for q in range(lattice.n_qubits) if depth.get(q, layers) >= layers)
    if not bulk:
        logger.warning("empty bulk", distance=lattice.distance)
        raise TooSmall(f"no bulk qubits remain at distance {lattice.distance}")
    return bulk


def _turns_match(turns: list[int], layout: WitnessLayout) -> bool:
    if len(turns) < 2:
        return True
    runs = [len(list(group)) for _, group in groupby(turns)]
    if layout is WitnessLayout.STAIRCASE:
        return all(r == 1 for r in runs)
    interior_ok = all(r == 2 for r in runs[1:-1])
    return interior_ok and max(runs) == 2


def _split_faces(lattice: ColorCodeLattice, path: list[int]) -> tuple[dict[int, int], list[int]]:
    """Side (0 or 1) of every plaquette bordering the path, and the side of each turn."""
    faces = [lattice.link_faces(u, v) for u, v in zip(path, path[1:])]
    if any(len(f) != 2 or any(lattice.plaquettes[k].boundary for k in f) for f in faces):
        raise NoValidLayout("path borders a missing or boundary plaquette")
    side = {faces[0][0]: 0, faces[0][1]: 1}
    turns = []
    for previous, current in zip(faces, faces[1:]):
        shared = set(previous) & set(current)
        if len(shared) != 1:
            raise NoValidLayout("consecutive links do not share exactly one plaquette")
        (common,) = shared
        (old,) = set(previous) - shared
        (new,) = set(current) - shared
        if side.setdefault(new, side[old]) != side[old]:
            raise NoValidLayout("plaquette lies on both sides of the path")
        turns.append(side[common])
    return side, turns


def _side_support(lattice: ColorCodeLattice, faces: list[int]) -> frozenset[int]:
    support: set[int] = set()
    for k in faces:
        support ^= set(lattice.plaquettes[k].qubits)
    return frozenset(support)


def _construct(
    lattice: ColorCodeLattice,
    path: list[int],
    layout: WitnessLayout,
    swap_types: bool,
) -> WitnessConstruction | None:
    try:
        side, turns = _split_faces(lattice, path)
    except NoValidLayout:
        return None
    if not _turns_match(turns, layout):
        return None
    faces = [sorted(k for k, s in side.items() if s == value) for value in (0, 1)]
    supports = [_side_support(lattice, f) for f in faces]
    a, b = path[0], path[-1]
    if supports[0] & supports[1] != {a, b}:
        return None
    x_side = 0 if len(supports[0]) <= len(supports[1]) else 1
    if swap_types:
        x_side = 1 - x_side
    n = lattice.n_qubits
    return WitnessConstruction(
        sx=PauliString.from_support(n, supports[x_side], Pauli.X),
        sz=PauliString.from_support(n, supports[1 - x_side], Pauli.Z),
        pair=(a, b),
        d=len(path) - 1,
        layout=layout,
        path=tuple(path),
        faces_x=tuple(faces[x_side]),
        faces_z=tuple(faces[1 - x_side]),
    )


def witness_plaquette_paths(
    lattice: ColorCodeLattice,
    a: int,
    b: int,
    layout: WitnessLayout = WitnessLayout.STAIRCASE,
    swap_types: bool = False,
) -> WitnessConstruction:
    """
    Witness on the first shortest lattice path from ``a`` to ``b`` (in label order) whose turns
    follow ``layout``: alternating for the staircase, in pairs for the armchair.
    """
    if a == b:
        raise InputError("witness endpoints coincide")
    try:
        paths = sorted(nx.all_shortest_paths(lattice.link_graph, a, b))
    except (nx.NetworkXNoPath, nx.NodeNotFound) as exc:
        raise NoValidLayout(f"no lattice path between {a} and {b}") from exc
    for path in paths:
        construction = _construct(lattice, path, layout, swap_types)
        if construction is not None:
            return construction
    raise NoValidLayout(f"no {layout.value} plaquette layout between {a} and {b}")


def canonical_pair(
    lattice: ColorCodeLattice, d: int, layout: WitnessLayout = WitnessLayout.STAIRCASE
) -> tuple[int, int]:
    """Lexicographically smallest bulk pair at lattice distance ``d`` admitting a witness."""
    if d < 1:
        raise InputError(f"lattice distance must be positive, got {d}")
    bulk = bulk_qubits(lattice)
    members = set(bulk)
    for a in bulk:
        reach = nx.single_source_shortest_path_length(lattice.link_graph, a, cutoff=d)
        for b in sorted(q for q, dist in reach.items() if dist == d and q > a and q in members):
            try:
                witness_plaquette_paths(lattice, a, b, layout)
            except NoValidLayout:
                continue
            return a, b
    logger.warning("no canonical pair", distance=lattice.distance, d=d, layout=layout.value)
    raise TooSmall(f"no bulk pair at lattice distance {d} admits a {layout.value} witness")
