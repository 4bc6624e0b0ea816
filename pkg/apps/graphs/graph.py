# apps/graphs/graph.py
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable

import networkx as nx
import numpy as np

from apps.common.exceptions import InputError, NodeOutOfRange
from apps.gf2.bitmatrix import BitMatrix
from apps.stab.clifford import U_X, U_Z, LocalCliffordLayer


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph held as a symmetric, zero-diagonal adjacency BitMatrix."""

    adjacency: BitMatrix

    def __post_init__(self) -> None:
        dense = self.adjacency.to_array()
        if dense.shape[0] != dense.shape[1]:
            raise InputError(f"adjacency must be square, got {dense.shape}")
        if not np.array_equal(dense, dense.T):
            raise InputError("adjacency must be symmetric")
        if dense.diagonal().any():
            raise InputError("adjacency must have a zero diagonal (no loops)")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        dense = np.zeros((n, n), dtype=np.uint8)
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise NodeOutOfRange(f"edge ({i}, {j}) outside {n} nodes")
            if i == j:
                raise InputError(f"self-loop at node {i}")
            dense[i, j] = dense[j, i] = 1
        return cls(BitMatrix.from_array(dense))

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> Graph:
        return cls.from_edges(g.number_of_nodes(), g.edges())

    @classmethod
    def from_json(cls, payload: dict[str, Any]) -> Graph:
        """Reads ``{"n": N, "edges": [[i, j], ...]}`` with 1-based labels."""
        try:
            n = int(payload["n"])
            edges = [(int(i) - 1, int(j) - 1) for i, j in payload["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed graph JSON: {exc}") from exc
        return cls.from_edges(n, edges)

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "edges": [[i + 1, j + 1] for i, j in self.edges()]}

    @property
    def n(self) -> int:
        return self.adjacency.rows

    @cached_property
    def dense(self) -> np.ndarray:
        array = self.adjacency.to_array()
        array.setflags(write=False)
        return array

    def check_node(self, i: int) -> None:
        if not 0 <= i < self.n:
            raise NodeOutOfRange(f"node {i} outside a graph of {self.n} nodes")

    def has_edge(self, i: int, j: int) -> bool:
        self.check_node(i)
        self.check_node(j)
        return bool(self.dense[i, j])

    def neighbors(self, i: int) -> list[int]:
        self.check_node(i)
        return [int(j) for j in np.flatnonzero(self.dense[i])]

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def edges(self) -> list[tuple[int, int]]:
        rows, cols = np.nonzero(np.triu(self.dense, 1))
        return [(int(i), int(j)) for i, j in zip(rows, cols)]

    def n_edges(self) -> int:
        return int(self.dense.sum()) // 2

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def is_connected(self) -> bool:
        return self.n > 0 and nx.is_connected(self.to_networkx())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.adjacency == other.adjacency

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.n_edges()})"


def local_complement(g: Graph, i: int) -> Graph:
    """Complements every edge inside the neighborhood of ``i``."""
    g.check_node(i)
    dense = g.dense.copy()
    row = dense[i].copy()
    dense ^= np.outer(row, row).astype(np.uint8)
    np.fill_diagonal(dense, 0)
    return Graph(BitMatrix.from_array(dense))


def lc_operation_count(g: Graph, i: int) -> int:
    """Links created plus links deleted by complementing at ``i``."""
    k = g.degree(i)
    return k * (k - 1) // 2


def lc_unitary(g: Graph, i: int) -> LocalCliffordLayer:
    """
    Phase-free action of exp(-iπX_i/4) ∏_{j ∈ N(i)} exp(iπZ_j/4), the local unitary that maps
    the graph state of ``g`` to that of ``local_complement(g, i)``.
    """
    gates = {j: U_Z for j in g.neighbors(i)}
    gates[i] = U_X
    return LocalCliffordLayer.on_qubits(g.n, gates)
