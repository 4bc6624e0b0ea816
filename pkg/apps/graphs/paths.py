# apps/graphs/paths.py
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import networkx as nx
import numpy as np

from apps.common.enums import PathCategory
from apps.common.exceptions import Disconnected, PathInvalid

from .graph import Graph

SeedLike = int | Sequence[int] | np.random.Generator


@dataclass(frozen=True)
class Path:
    """Ordered simple path [a = m_1, ..., m_n = b]."""

    nodes: tuple[int, ...]

    def __post_init__(self) -> None:
        nodes = tuple(int(v) for v in self.nodes)
        if len(nodes) < 2:
            raise PathInvalid("a path needs at least two nodes")
        if len(set(nodes)) != len(nodes):
            raise PathInvalid(f"path {list(nodes)} repeats a node")
        object.__setattr__(self, "nodes", nodes)

    @property
    def length(self) -> int:
        return len(self.nodes) - 1

    @property
    def start(self) -> int:
        return self.nodes[0]

    @property
    def end(self) -> int:
        return self.nodes[-1]

    @property
    def interior(self) -> tuple[int, ...]:
        return self.nodes[1:-1]

    def validate(self, g: Graph) -> None:
        for u, v in zip(self.nodes, self.nodes[1:]):
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.dense[u, v]:
                raise PathInvalid(f"nodes {u} and {v} are not linked")

    def __len__(self) -> int:
        return len(self.nodes)


def _chords(g: Graph, p: Path) -> np.ndarray:
    idx = list(p.nodes)
    return np.triu(g.dense[np.ix_(idx, idx)], 2)


def classify_path(g: Graph, p: Path) -> PathCategory:
    """C1 iff no link joins two non-consecutive path nodes."""
    p.validate(g)
    return PathCategory.C2 if _chords(g, p).any() else PathCategory.C1


def distill_c1(g: Graph, p: Path) -> Path:
    """
    Greedy chordless sub-path: from the current node jump to the linked path node that lies
    furthest along ``p``. Each jump strictly advances, so at most ``p.length`` steps are taken.
    """
    p.validate(g)
    position = {v: k for k, v in enumerate(p.nodes)}
    current = p.start
    distilled = [current]
    while current != p.end:
        ahead = [v for v in g.neighbors(current) if position.get(v, -1) > position[current]]
        current = max(ahead, key=position.__getitem__)
        distilled.append(current)
    return Path(tuple(distilled))


def shortest_path(g: Graph, a: int, b: int) -> Path:
    """Breadth-first search visiting neighbors in increasing label order."""
    g.check_node(a)
    g.check_node(b)
    if a == b:
        raise PathInvalid("endpoints coincide")
    predecessors = dict(nx.bfs_predecessors(g.to_networkx(), a, sort_neighbors=sorted))
    if b not in predecessors:
        raise Disconnected(f"node {b} is unreachable from node {a}")
    nodes = [b]
    while nodes[-1] != a:
        nodes.append(predecessors[nodes[-1]])
    return Path(tuple(reversed(nodes)))


def as_generator(seed: SeedLike) -> np.random.Generator:
    """PCG64 generator; sequences such as [seed, sample_index] spawn independent streams."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(seed))


def random_simple_path(g: Graph, a: int, b: int, seed: SeedLike) -> Path:
    """Randomized depth-first search from ``a``; the DFS branch that reaches ``b`` is returned."""
    g.check_node(a)
    g.check_node(b)
    if a == b:
        raise PathInvalid("endpoints coincide")
    rng = as_generator(seed)

    def shuffled(v: int) -> list[int]:
        nbrs = g.neighbors(v)
        return [nbrs[k] for k in rng.permutation(len(nbrs))]

    visited = {a}
    path = [a]
    stack = [shuffled(a)]
    while stack:
        frontier = stack[-1]
        if not frontier:
            stack.pop()
            path.pop()
            continue
        v = frontier.pop()
        if v in visited:
            continue
        if v == b:
            return Path(tuple(path + [b]))
        visited.add(v)
        path.append(v)
        stack.append(shuffled(v))
    raise Disconnected(f"node {b} is unreachable from node {a}")
