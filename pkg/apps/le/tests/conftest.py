# apps/le/tests/conftest.py
import pytest

from apps.codes.lattice import build_seven_qubit
from apps.codes.logical import logical_plus_tableau
from apps.graphs.graph import Graph


@pytest.fixture
def seven_qubit():
    return build_seven_qubit()


@pytest.fixture
def seven_qubit_plus(seven_qubit):
    return logical_plus_tableau(seven_qubit)


@pytest.fixture
def path3():
    return Graph.from_edges(3, [(0, 1), (1, 2)])
