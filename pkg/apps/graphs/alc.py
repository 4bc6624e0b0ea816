# apps/graphs/alc.py
"""
Adaptive local complementation: creates the link (a, b) by complementing the interior nodes of
a chordless path in path order. Chords that appear along the way are removed by re-distilling
the remaining path before the next step.
"""
from __future__ import annotations

from dataclasses import dataclass

import structlog

from apps.common.enums import PathCategory
from apps.common.exceptions import Disconnected, LinkAlreadyPresent, PathInvalid
from apps.stab.clifford import LocalCliffordLayer

from .graph import Graph, lc_operation_count, lc_unitary, local_complement
from .paths import Path, classify_path, distill_c1

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class LcRecord:
    nodes: tuple[int, ...]
    unitary: LocalCliffordLayer
    link_operations: int
    path: Path

    @property
    def n_lc(self) -> int:
        return len(self.nodes)


def alc_create_link(g: Graph, a: int, b: int, p: Path) -> tuple[Graph, LcRecord]:
    g.check_node(a)
    g.check_node(b)
    if (p.start, p.end) != (a, b):
        raise PathInvalid(f"path runs from {p.start} to {p.end}, expected {a} to {b}")
    if g.has_edge(a, b):
        raise LinkAlreadyPresent(f"nodes {a} and {b} are already linked")
    if not g.is_connected():
        raise Disconnected("adaptive local complementation needs a connected graph")
    if classify_path(g, p) is PathCategory.C2:
        p = distill_c1(g, p)

    current = g
    remaining = p
    unitary = LocalCliffordLayer.identity(g.n)
    complemented: list[int] = []
    link_operations = 0
    while remaining.length > 1:
        if classify_path(current, remaining) is PathCategory.C2:
            remaining = distill_c1(current, remaining)
            continue
        node = remaining.nodes[1]
        unitary = unitary.then(lc_unitary(current, node))
        link_operations += lc_operation_count(current, node)
        current = local_complement(current, node)
        complemented.append(node)
        remaining = Path((a,) + remaining.nodes[2:])

    logger.debug(
        "created link",
        pair=(a, b),
        n_lc=len(complemented),
        link_operations=link_operations,
    )
    record = LcRecord(
        nodes=tuple(complemented),
        unitary=unitary,
        link_operations=link_operations,
        path=p,
    )
    return current, record
