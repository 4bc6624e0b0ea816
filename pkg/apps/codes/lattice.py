# apps/codes/lattice.py
"""
Color-code lattices.

The square-hexagonal family is built on the dual triangular lattice: every triangle is a qubit
and every plaquette vertex is a plaquette made of the triangles around it. A point (i, j) sits at
(i + j/2, j·√3/2) and is colored by (i − j) mod 3. Outer vertices carry no plaquette; a
triangle is kept when it touches a plaquette vertex and all its corners are plaquette or outer
vertices. The patch is a rectangle whose R boundaries run along dual rows (top and bottom) and
whose G boundaries are zigzag cuts (left and right), so boundary colors alternate around it.
Interior vertices give hexagons, boundary vertices squares. Two qubits are linked when their
triangles share an edge.

Qubits are labelled row-major: by the y then x coordinate of the triangle centroid.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Callable

import networkx as nx
import numpy as np
import numpy.typing as npt
import structlog

from apps.common.enums import LatticeFamily, PlaquetteColor
from apps.common.exceptions import InconsistentLattice, InvalidDistance, NodeOutOfRange
from apps.gf2.bitmatrix import BitMatrix, rank
from apps.graphs.graph import Graph

from .logical import logical_operators

logger = structlog.get_logger(__name__)

_COLORS = (PlaquetteColor.R, PlaquetteColor.G, PlaquetteColor.B)
_SQRT3_2 = math.sqrt(3) / 2
# outer colors of the square-hexagonal patch: R above and below, G left and right
_ROW_BOUNDARY = 0
_EDGE_BOUNDARY = 1


@dataclass(frozen=True)
class Plaquette:
    qubits: tuple[int, ...]
    color: PlaquetteColor
    center: tuple[float, float]
    boundary: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "qubits", tuple(sorted(self.qubits)))
        if len(self.qubits) < 4 or len(self.qubits) % 2:
            raise InconsistentLattice(f"plaquette {self.qubits} must hold an even number >= 4")

    @property
    def weight(self) -> int:
        return len(self.qubits)


@dataclass(frozen=True, eq=False)
class ColorCodeLattice:
    family: LatticeFamily
    distance: int
    coordinates: npt.NDArray[np.float64]
    plaquettes: tuple[Plaquette, ...]
    links: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        n = self.n_qubits
        for p in self.plaquettes:
            if p.qubits[-1] >= n:
                raise InconsistentLattice(f"plaquette {p.qubits} names a qubit outside {n}")
        check = self.check_matrix.to_array().astype(np.int64)
        overlaps = (check @ check.T) & 1
        if overlaps.any():
            raise InconsistentLattice("two plaquettes share an odd number of qubits")

    @property
    def n_qubits(self) -> int:
        return int(self.coordinates.shape[0])

    @property
    def n_plaquettes(self) -> int:
        return len(self.plaquettes)

    @property
    def n_logical(self) -> int:
        return self.n_qubits - 2 * rank(self.check_matrix)

    @cached_property
    def check_matrix(self) -> BitMatrix:
        """Plaquette-by-qubit incidence; the same matrix serves the X and Z checks."""
        dense = np.zeros((self.n_plaquettes, self.n_qubits), dtype=np.uint8)
        for k, p in enumerate(self.plaquettes):
            dense[k, list(p.qubits)] = 1
        return BitMatrix.from_array(dense)

    @cached_property
    def link_graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n_qubits))
        g.add_edges_from(self.links)
        return g

    @cached_property
    def qubit_plaquettes(self) -> tuple[tuple[int, ...], ...]:
        owners: list[list[int]] = [[] for _ in range(self.n_qubits)]
        for k, p in enumerate(self.plaquettes):
            for q in p.qubits:
                owners[q].append(k)
        return tuple(tuple(o) for o in owners)

    def link_faces(self, u: int, v: int) -> list[int]:
        """Plaquettes bordering the link (u, v)."""
        return sorted(set(self.qubit_plaquettes[u]) & set(self.qubit_plaquettes[v]))

    def to_json(self) -> dict[str, Any]:
        logical_x, logical_z = logical_operators(self.check_matrix)
        return {
            "distance": self.distance,
            "qubits": [
                {"id": q + 1, "xy": [round(float(x), 12), round(float(y), 12)]}
                for q, (x, y) in enumerate(self.coordinates)
            ],
            "plaquettes": [
                {"qubits": [q + 1 for q in p.qubits], "color": p.color.value}
                for p in self.plaquettes
            ],
            "logical_x": _supports(logical_x),
            "logical_z": _supports(logical_z),
        }


def _supports(rows: BitMatrix) -> list[list[int]]:
    return [[int(q) + 1 for q in np.flatnonzero(row)] for row in rows.to_array()]


def expected_qubit_count(d: int) -> int:
    return 3 * d * d // 2 - 2 * (d - 1)


def _row_major(points: npt.NDArray[np.float64]) -> npt.NDArray[np.int64]:
    return np.lexsort((np.round(points[:, 0], 9), np.round(points[:, 1], 9)))


def _square_hexagonal_vertices(
    d: int,
) -> tuple[Callable[[int, int], bool], Callable[[int, int], bool]]:
    """
    Plaquette and outer vertices of the distance-``d`` patch.

    Plaquette vertices fill dual rows 0..d-1 between x = 0 and x = 3d/4 - 1, except the R vertices
    of the first and last row. Outer vertices carry no plaquette: R vertices on the two rows below
    and the two rows above, and G stubs half a step beyond the left and right edges.
    """
    top = d - 1
    width = 2 * (3 * d // 4 - 1)  # in half steps

    def inner(i: int, j: int) -> bool:
        if not (0 <= j <= top and 0 <= 2 * i + j <= width):
            return False
        return not (j in (0, top) and (i - j) % 3 == _ROW_BOUNDARY)

    def outer(i: int, j: int) -> bool:
        color = (i - j) % 3
        if j in (-1, 0, top, top + 1) and color == _ROW_BOUNDARY:
            return True
        return 0 <= j <= top and 2 * i + j in (-1, width + 1) and color == _EDGE_BOUNDARY

    return inner, outer


def build_square_hexagonal(d: int) -> ColorCodeLattice:
    if d < 4 or d % 4:
        raise InvalidDistance(
            f"square-hexagonal distance must be a positive multiple of 4, got {d}"
        )
    inner, outer = _square_hexagonal_vertices(d)

    def kept(t: tuple[tuple[int, int], ...]) -> bool:
        return all(inner(*p) or outer(*p) for p in t) and any(inner(*p) for p in t)

    span = d + 2
    triangles: list[tuple[tuple[int, int], ...]] = []
    for j in range(-1, d):
        for i in range(-span, span):
            up = ((i, j), (i + 1, j), (i, j + 1))
            down = ((i + 1, j), (i, j + 1), (i + 1, j + 1))
            triangles.extend(t for t in (up, down) if kept(t))

    def position(point: tuple[int, int]) -> tuple[float, float]:
        i, j = point
        return i + j / 2, j * _SQRT3_2

    centroids = np.array([np.mean([position(p) for p in t], axis=0) for t in triangles])
    order = _row_major(centroids)
    triangles = [triangles[k] for k in order]
    coordinates = centroids[order]

    incident: dict[tuple[int, int], list[int]] = defaultdict(list)
    by_edge: dict[frozenset[tuple[int, int]], list[int]] = defaultdict(list)
    for q, t in enumerate(triangles):
        for point in t:
            incident[point].append(q)
        for u in range(3):
            for v in range(u + 1, 3):
                by_edge[frozenset((t[u], t[v]))].append(q)

    points = [p for p in incident if inner(*p)]
    centers = np.array([position(p) for p in points])
    plaquettes = tuple(
        Plaquette(
            qubits=tuple(incident[points[k]]),
            color=_COLORS[(points[k][0] - points[k][1]) % 3],
            center=(float(centers[k, 0]), float(centers[k, 1])),
            boundary=len(incident[points[k]]) < 6,
        )
        for k in _row_major(centers)
    )
    links = tuple(sorted((min(qs), max(qs)) for qs in by_edge.values() if len(qs) == 2))

    lattice = ColorCodeLattice(
        family=LatticeFamily.SQUARE_HEXAGONAL,
        distance=d,
        coordinates=coordinates,
        plaquettes=plaquettes,
        links=links,
    )
    if lattice.n_qubits != expected_qubit_count(d) or lattice.n_logical != 2:
        raise InconsistentLattice(
            f"distance {d} patch gives N={lattice.n_qubits}, k={lattice.n_logical}"
        )
    logger.debug(
        "built square-hexagonal lattice",
        distance=d,
        n_qubits=lattice.n_qubits,
        n_plaquettes=lattice.n_plaquettes,
    )
    return lattice


def build_seven_qubit() -> ColorCodeLattice:
    """Smallest color code: three four-qubit plaquettes meeting at qubit 3 (1-based)."""

    def polar(radius: float, degrees: float) -> tuple[float, float]:
        angle = math.radians(degrees)
        return radius * math.cos(angle), radius * math.sin(angle)

    coordinates = np.array(
        [
            polar(2.0, 90),
            polar(1.0, 150),
            (0.0, 0.0),
            polar(1.0, 30),
            polar(2.0, 210),
            polar(1.0, 270),
            polar(2.0, 330),
        ]
    )
    plaquettes = (
        Plaquette((0, 1, 2, 3), PlaquetteColor.R, polar(1.0, 90)),
        Plaquette((1, 2, 4, 5), PlaquetteColor.G, polar(1.0, 210)),
        Plaquette((2, 3, 5, 6), PlaquetteColor.B, polar(1.0, 330)),
    )
    links = ((0, 1), (0, 3), (1, 2), (1, 4), (2, 3), (2, 5), (3, 6), (4, 5), (5, 6))
    return ColorCodeLattice(
        family=LatticeFamily.SEVEN_QUBIT,
        distance=3,
        coordinates=coordinates,
        plaquettes=plaquettes,
        links=links,
    )


def local_graph(lattice: ColorCodeLattice) -> Graph:
    """Graph whose links are the lattice links."""
    return Graph.from_edges(lattice.n_qubits, lattice.links)


def lattice_distance(lattice: ColorCodeLattice, a: int, b: int) -> int:
    """Length of the shortest path of lattice links between ``a`` and ``b``."""
    for q in (a, b):
        if not 0 <= q < lattice.n_qubits:
            raise NodeOutOfRange(f"qubit {q} outside a lattice of {lattice.n_qubits}")
    return int(nx.shortest_path_length(lattice.link_graph, a, b))
