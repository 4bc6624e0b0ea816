# apps/le/tests/test_dense.py
import numpy as np
import pytest

from apps.common.enums import NoiseKind, Pauli
from apps.common.exceptions import InputError, TooLarge
from apps.graphs.graph import Graph
from apps.le.dense import all_z_setting, apply_pauli_channel, mlb_dense, rle_exhaustive
from apps.noise.channels import NoiseModel, standard_channel, transform_noise
from apps.stab.tableau import apply_local_clifford, graph_to_tableau
from apps.stab.tests.factories import LocalCliffordLayerFactory, StabilizerTableauFactory

SEVEN_QUBIT_SETTING = {1: Pauli.Y, 6: Pauli.X, 2: Pauli.Z, 3: Pauli.Z, 5: Pauli.Z}


class TestExamples:
    def test_linked_pair(self):
        t = graph_to_tableau(Graph.from_edges(2, [(0, 1)]))
        assert mlb_dense(t, 0, 1, NoiseModel.noiseless(2)) == pytest.approx(1.0, abs=1e-12)

    def test_path_ends_need_an_x_measurement(self, path3):
        t = graph_to_tableau(path3)
        m = NoiseModel.noiseless(3)
        assert mlb_dense(t, 0, 2, m) == pytest.approx(0.0, abs=1e-12)
        assert mlb_dense(t, 0, 2, m, {1: Pauli.X}) == pytest.approx(1.0, abs=1e-12)
        assert mlb_dense(t, 0, 2, m, {1: Pauli.Y}) == pytest.approx(1.0, abs=1e-12)

    def test_seven_qubit_setting(self, seven_qubit_plus):
        m = NoiseModel.noiseless(7)
        value = mlb_dense(seven_qubit_plus, 0, 4, m, SEVEN_QUBIT_SETTING)
        assert value == pytest.approx(1.0, abs=1e-10)

    def test_bit_flips_on_the_middle_qubit(self, path3):
        t = graph_to_tableau(path3)
        m = standard_channel(NoiseKind.PF, 0.2, 3)
        # Z errors on the ends shift the X0X2 sign, on the middle qubit the Z0Z2 sign
        no_xx_shift = 0.9 * 0.9 + 0.1 * 0.1
        expected = 2 * no_xx_shift * 0.9 - 1
        assert mlb_dense(t, 0, 2, m, {1: Pauli.X}) == pytest.approx(expected, abs=1e-12)


class TestErrors:
    def test_too_large(self):
        t = graph_to_tableau(Graph.from_edges(15, [(k, k + 1) for k in range(14)]))
        with pytest.raises(TooLarge):
            mlb_dense(t, 0, 1, NoiseModel.noiseless(15))

    def test_incomplete_setting(self, path3):
        with pytest.raises(InputError):
            mlb_dense(graph_to_tableau(path3), 0, 2, NoiseModel.noiseless(3), {})

    def test_identity_is_not_a_basis(self, path3):
        with pytest.raises(InputError):
            mlb_dense(graph_to_tableau(path3), 0, 2, NoiseModel.noiseless(3), {1: Pauli.I})

    def test_same_endpoints(self, path3):
        with pytest.raises(InputError):
            mlb_dense(graph_to_tableau(path3), 1, 1, NoiseModel.noiseless(3))

    def test_rle_limit(self):
        t = graph_to_tableau(Graph.from_edges(10, [(k, k + 1) for k in range(9)]))
        with pytest.raises(TooLarge):
            rle_exhaustive(t, 0, 1, NoiseModel.noiseless(10))


class TestExhaustive:
    def test_path_graph(self, path3):
        value, setting = rle_exhaustive(graph_to_tableau(path3), 0, 2, NoiseModel.noiseless(3))
        assert value == pytest.approx(1.0, abs=1e-12)
        assert setting[1] in (Pauli.X, Pauli.Y)

    def test_dominates_every_setting(self, seven_qubit_plus):
        m = standard_channel(NoiseKind.PF, 0.1, 7)
        best, _ = rle_exhaustive(seven_qubit_plus, 0, 4, m)
        assert best >= mlb_dense(seven_qubit_plus, 0, 4, m, SEVEN_QUBIT_SETTING) - 1e-12
        assert best >= mlb_dense(seven_qubit_plus, 0, 4, m) - 1e-12


class TestProperties:
    def test_local_unitary_invariance(self):
        rng = np.random.default_rng(17)
        for seed in range(25):
            n = int(rng.integers(3, 8))
            t = StabilizerTableauFactory(seed=seed, n=n)
            u = LocalCliffordLayerFactory(seed=1000 + seed, n=n)
            a, b = (int(v) for v in rng.choice(n, size=2, replace=False))
            raw = rng.random((n, 4))
            m = NoiseModel(raw / raw.sum(axis=1, keepdims=True))
            axes = [Pauli.X, Pauli.Y, Pauli.Z]
            setting = {q: axes[int(rng.integers(3))] for q in range(n) if q not in (a, b)}
            moved_setting = {q: u.map_pauli(q, p) for q, p in setting.items()}
            before = mlb_dense(t, a, b, m, setting)
            after = mlb_dense(
                apply_local_clifford(t, u), a, b, transform_noise(m, u), moved_setting
            )
            assert before == pytest.approx(after, abs=1e-10)

    @pytest.mark.parametrize("kind", [NoiseKind.BF, NoiseKind.PF, NoiseKind.BPF, NoiseKind.DP])
    def test_bounded_and_nonincreasing(self, seven_qubit_plus, kind):
        values = [
            mlb_dense(seven_qubit_plus, 0, 4, standard_channel(kind, q, 7), SEVEN_QUBIT_SETTING)
            for q in np.linspace(0, 1, 6)
        ]
        assert all(-1e-12 <= v <= 1 + 1e-12 for v in values)
        assert all(x >= y - 1e-10 for x, y in zip(values, values[1:]))


def test_channel_on_a_single_qubit_state():
    rho = np.array([[1, 0], [0, 0]], dtype=complex)
    noisy = apply_pauli_channel(rho, np.array([[0.7, 0.2, 0.1, 0.0]]))
    np.testing.assert_allclose(noisy, np.diag([0.7, 0.3]), atol=1e-15)


def test_all_z_setting():
    assert all_z_setting(4, 1, 3) == {0: Pauli.Z, 2: Pauli.Z}
