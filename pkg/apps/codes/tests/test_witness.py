# apps/codes/tests/test_witness.py
import networkx as nx
import pytest

from apps.codes.witness import (
    WitnessConstruction,
    bulk_qubits,
    canonical_pair,
    witness_conditions_hold,
    witness_plaquette_paths,
)
from apps.common.enums import Pauli, WitnessLayout
from apps.common.exceptions import InputError, InvalidWitness, NoValidLayout, TooSmall
from apps.stab.pauli import PauliString


class TestSevenQubit:
    def test_adjacent_plaquettes(self, seven_qubit):
        w = witness_plaquette_paths(seven_qubit, 1, 2)
        assert w.sx.support == {0, 1, 2, 3}
        assert w.sz.support == {1, 2, 4, 5}
        assert w.sx.label() == "XXXXIII"
        assert w.sz.label() == "IZZIZZI"
        assert (w.d, w.n_x, w.n_z) == (1, 4, 4)
        assert w.path == (1, 2)

    def test_swap_types(self, seven_qubit):
        w = witness_plaquette_paths(seven_qubit, 1, 2, swap_types=True)
        assert w.sx.support == {1, 2, 4, 5}
        assert w.sz.support == {0, 1, 2, 3}

    def test_link_on_a_single_plaquette(self, seven_qubit):
        with pytest.raises(NoValidLayout):
            witness_plaquette_paths(seven_qubit, 0, 1)

    def test_coinciding_endpoints(self, seven_qubit):
        with pytest.raises(InputError):
            witness_plaquette_paths(seven_qubit, 2, 2)


class TestConditions:
    def test_bell_pair(self):
        sx = PauliString.from_label("XX")
        sz = PauliString.from_label("ZZ")
        assert witness_conditions_hold(sx, sz, (0, 1))

    def test_identical_factor_on_the_pair(self):
        sx = PauliString.from_label("XXI")
        sz = PauliString.from_label("XZZ")
        assert not witness_conditions_hold(sx, sz, (0, 1))

    def test_anticommuting_outside(self):
        sx = PauliString.from_label("XXX")
        sz = PauliString.from_label("ZZZ")
        assert not witness_conditions_hold(sx, sz, (0, 1))

    def test_invalid_construction_raises(self):
        with pytest.raises(InvalidWitness):
            WitnessConstruction(
                sx=PauliString.from_support(3, [0], Pauli.X),
                sz=PauliString.from_support(3, [0, 1], Pauli.Z),
                pair=(0, 1),
                d=1,
            )


class TestBulk:
    def test_bulk_d4(self, lattice_d4):
        assert bulk_qubits(lattice_d4) == (2, 5, 6, 8, 10, 11, 12, 13)

    @pytest.mark.parametrize("fixture", ["lattice_d8", "lattice_d12"])
    def test_bulk_keeps_its_distance_from_the_boundary(self, request, fixture):
        lattice = request.getfixturevalue(fixture)
        bulk = set(bulk_qubits(lattice))
        g = lattice.link_graph
        radius = lattice.distance // 4 - 1
        assert bulk
        for q in g.nodes:
            around = nx.ego_graph(g, q, radius=radius)
            full = all(g.degree(v) == 3 for v in around.nodes)
            assert full == (q in bulk)

    def test_bulk_qubits_have_three_full_plaquettes(self, lattice_d8):
        for q in bulk_qubits(lattice_d8):
            owners = lattice_d8.qubit_plaquettes[q]
            assert len(owners) == 3
            assert not any(lattice_d8.plaquettes[k].boundary for k in owners)

    def test_seven_qubit_bulk_is_everything(self, seven_qubit):
        assert bulk_qubits(seven_qubit) == tuple(range(7))


class TestCanonical:
    def test_nearest_pair_d4(self, lattice_d4):
        assert canonical_pair(lattice_d4, 1) == (5, 8)
        w = witness_plaquette_paths(lattice_d4, 5, 8)
        assert (w.n_x, w.n_z) == (6, 6)

    @pytest.mark.parametrize("fixture", ["lattice_d8", "lattice_d12"])
    def test_nearest_pair_is_the_first_bulk_link_between_hexagons(self, request, fixture):
        lattice = request.getfixturevalue(fixture)
        a, b = canonical_pair(lattice, 1)
        bulk = bulk_qubits(lattice)
        assert {a, b} <= set(bulk)
        assert lattice.link_graph.has_edge(a, b)
        assert all(not lattice.plaquettes[k].boundary for k in lattice.link_faces(a, b))
        earlier = [
            (u, v)
            for u, v in lattice.links
            if u in bulk and v in bulk and (u, v) < (a, b)
        ]
        for u, v in earlier:
            with pytest.raises(NoValidLayout):
                witness_plaquette_paths(lattice, u, v)

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
    def test_staircase_support_growth(self, lattice_d12, d):
        a, b = canonical_pair(lattice_d12, d)
        w = witness_plaquette_paths(lattice_d12, a, b)
        assert w.d == d
        assert w.n_x == 6 + 2 * ((d - 1) // 2)
        assert w.n_z == 6 + 2 * (d // 2)
        assert witness_conditions_hold(w.sx, w.sz, w.pair)
        assert w.sx.support & w.sz.support == {a, b}

    def test_armchair_around_a_hexagon(self, lattice_d12):
        a, b = canonical_pair(lattice_d12, 3, WitnessLayout.ARMCHAIR)
        w = witness_plaquette_paths(lattice_d12, a, b, WitnessLayout.ARMCHAIR)
        assert w.layout is WitnessLayout.ARMCHAIR
        assert (w.n_x, w.n_z) == (6, 14)
        assert len(w.faces_x) == 1
        assert len(w.faces_z) == 3

    def test_staircase_faces(self, lattice_d12):
        a, b = canonical_pair(lattice_d12, 4)
        w = witness_plaquette_paths(lattice_d12, a, b)
        assert len(w.faces_x) + len(w.faces_z) == 5

    def test_no_pair_far_enough(self, lattice_d4):
        with pytest.raises(TooSmall):
            canonical_pair(lattice_d4, 30)

    def test_nonpositive_distance(self, lattice_d4):
        with pytest.raises(InputError):
            canonical_pair(lattice_d4, 0)
