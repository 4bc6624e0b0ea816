# apps/graphs/tests/conftest.py
import pytest

from apps.graphs.graph import Graph


@pytest.fixture
def path3():
    """1–2–3, 0-based."""
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def triangle():
    return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def star():
    """K_{1,3} centred on node 0."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def chorded_graph():
    """
    Eight nodes; the path 1..7 carries the chords (1,3), (1,5), (2,4), (3,7), (4,6) and node 8
    hangs off node 4 (labels 1-based in this docstring, 0-based in the edge list).
    """
    path = [(k, k + 1) for k in range(6)]
    chords = [(0, 2), (0, 4), (1, 3), (2, 6), (3, 5)]
    return Graph.from_edges(8, path + chords + [(3, 7)])


@pytest.fixture
def seven_qubit_graph():
    """Graph of the 7-qubit color code with controls 1, 5, 7 (0-based 0, 4, 6)."""
    links = [(0, 1), (0, 2), (0, 3), (4, 1), (4, 2), (4, 5), (6, 2), (6, 3), (6, 5)]
    return Graph.from_edges(7, links)
