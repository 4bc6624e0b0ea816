# apps/graphs/tests/test_graph.py
import numpy as np
import pytest

from apps.common.exceptions import InputError, NodeOutOfRange
from apps.gf2.bitmatrix import BitMatrix
from apps.graphs.graph import Graph, lc_operation_count, lc_unitary, local_complement
from apps.stab.clifford import IDENTITY, U_X, U_Z
from apps.stab.tableau import apply_local_clifford, graph_to_tableau, tableau_equivalent

from .factories import ConnectedGraphFactory


class TestGraphValue:
    def test_rejects_loops_and_asymmetry(self):
        with pytest.raises(InputError):
            Graph.from_edges(2, [(0, 0)])
        with pytest.raises(InputError):
            Graph(BitMatrix.from_rows([[0, 1], [0, 0]]))

    def test_json_uses_one_based_labels(self, path3):
        payload = path3.to_json()
        assert payload == {"n": 3, "edges": [[1, 2], [2, 3]]}
        assert Graph.from_json(payload) == path3

    def test_malformed_json(self):
        with pytest.raises(InputError):
            Graph.from_json({"n": 3})

    def test_neighbors_and_degree(self, star):
        assert star.neighbors(0) == [1, 2, 3]
        assert star.degree(3) == 1
        with pytest.raises(NodeOutOfRange):
            star.neighbors(4)

    def test_connectivity(self, path3):
        assert path3.is_connected()
        assert not Graph.from_edges(3, [(0, 1)]).is_connected()


class TestLocalComplement:
    def test_path_becomes_triangle(self, path3, triangle):
        assert local_complement(path3, 1) == triangle

    def test_star_becomes_complete(self, star):
        complete = Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
        assert local_complement(star, 0) == complete
        assert lc_operation_count(star, 0) == 3

    def test_involution_at_same_node(self, path3):
        assert local_complement(local_complement(path3, 1), 1) == path3

    def test_node_out_of_range(self, path3):
        with pytest.raises(NodeOutOfRange):
            local_complement(path3, 3)

    def test_involution_on_random_graphs(self):
        rng = np.random.default_rng(7)
        for k in range(200):
            g = ConnectedGraphFactory(seed=k, n=int(rng.integers(2, 25)), density=0.3)
            i = int(rng.integers(0, g.n))
            assert local_complement(local_complement(g, i), i) == g

    def test_edges_outside_neighborhood_untouched(self, chorded_graph):
        after = local_complement(chorded_graph, 3)
        untouched = set(range(8)) - set(chorded_graph.neighbors(3))
        for i in untouched:
            for j in untouched:
                assert after.dense[i, j] == chorded_graph.dense[i, j]


class TestLcUnitary:
    def test_isolated_node(self):
        g = Graph.from_edges(2, [])
        layer = lc_unitary(g, 0)
        assert np.array_equal(layer[0], U_X)
        assert np.array_equal(layer[1], IDENTITY)

    def test_support_is_closed_neighborhood(self, path3):
        layer = lc_unitary(path3, 1)
        assert np.array_equal(layer[1], U_X)
        assert np.array_equal(layer[0], U_Z)
        assert np.array_equal(layer[2], U_Z)
        assert layer.labels() == ["YXZ", "XZY", "YXZ"]

    def test_matches_local_complement(self):
        for k in range(60):
            g = ConnectedGraphFactory(seed=1000 + k, n=10, density=0.35)
            i = k % g.n
            rotated = apply_local_clifford(graph_to_tableau(g), lc_unitary(g, i))
            assert tableau_equivalent(rotated, graph_to_tableau(local_complement(g, i)))
