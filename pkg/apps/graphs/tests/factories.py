# apps/graphs/tests/factories.py
import factory
import networkx as nx
import numpy as np

from apps.graphs.graph import Graph


def random_connected_networkx(rng: np.random.Generator, n: int, density: float) -> nx.Graph:
    """Random spanning tree plus independent extra links."""
    g = nx.Graph()
    g.add_nodes_from(range(n))
    for k in range(1, n):
        g.add_edge(k, int(rng.integers(0, k)))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                g.add_edge(i, j)
    return g


class ConnectedGraphFactory(factory.Factory):
    class Meta:
        model = Graph.from_networkx

    class Params:
        seed = factory.Sequence(lambda n: n)
        n = 8
        density = 0.2

    g = factory.LazyAttribute(
        lambda o: random_connected_networkx(np.random.default_rng(o.seed), o.n, o.density)
    )
