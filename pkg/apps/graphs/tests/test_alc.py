# apps/graphs/tests/test_alc.py
import numpy as np
import pytest

from apps.common.enums import PathCategory
from apps.common.exceptions import Disconnected, LinkAlreadyPresent, PathInvalid
from apps.graphs.alc import alc_create_link
from apps.graphs.graph import Graph
from apps.graphs.paths import Path, classify_path, random_simple_path, shortest_path
from apps.stab.tableau import apply_local_clifford, graph_to_tableau, tableau_equivalent

from .factories import ConnectedGraphFactory


class TestExamples:
    def test_path_graph(self, path3):
        after, record = alc_create_link(path3, 0, 2, Path((0, 1, 2)))
        assert after.has_edge(0, 2)
        assert record.nodes == (1,)
        assert record.n_lc == 1

    def test_seven_qubit_graph(self, seven_qubit_graph):
        p = shortest_path(seven_qubit_graph, 0, 4)
        after, record = alc_create_link(seven_qubit_graph, 0, 4, p)
        assert record.nodes == (1,)
        assert after.has_edge(0, 4)

    def test_chorded_path_is_distilled_first(self, chorded_graph):
        after, record = alc_create_link(chorded_graph, 0, 6, Path(tuple(range(7))))
        assert after.has_edge(0, 6)
        assert [v + 1 for v in record.path.nodes] == [1, 5, 6, 7]
        assert record.nodes == (4, 5)


class TestErrors:
    def test_link_already_present(self, triangle):
        with pytest.raises(LinkAlreadyPresent):
            alc_create_link(triangle, 0, 2, Path((0, 1, 2)))

    def test_wrong_endpoints(self, path3):
        with pytest.raises(PathInvalid):
            alc_create_link(path3, 0, 2, Path((0, 1)))

    def test_disconnected(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2)])
        with pytest.raises(Disconnected):
            alc_create_link(g, 0, 2, Path((0, 1, 2)))


class TestGuarantee:
    def test_random_graphs_always_gain_the_link(self):
        rng = np.random.default_rng(2024)
        runs = 0
        seed = 0
        while runs < 500:
            seed += 1
            n = int(rng.integers(5, 61))
            g = ConnectedGraphFactory(seed=seed, n=n, density=float(rng.uniform(0.02, 0.2)))
            a, b = (int(v) for v in rng.choice(n, size=2, replace=False))
            if g.has_edge(a, b):
                continue
            p = random_simple_path(g, a, b, [seed, runs])
            c1 = classify_path(g, p) is PathCategory.C1
            after, record = alc_create_link(g, a, b, p)
            assert after.has_edge(a, b)
            assert record.link_operations <= n**3
            if c1:
                assert record.n_lc == p.length - 1
            if runs % 10 == 0:
                rotated = apply_local_clifford(graph_to_tableau(g), record.unitary)
                assert tableau_equivalent(rotated, graph_to_tableau(after))
            runs += 1

    def test_complemented_nodes_lie_on_the_path(self):
        for k in range(50):
            g = ConnectedGraphFactory(seed=500 + k, n=20, density=0.2)
            if g.has_edge(0, 19):
                continue
            p = random_simple_path(g, 0, 19, k)
            _, record = alc_create_link(g, 0, 19, p)
            assert set(record.nodes) <= set(p.interior)
