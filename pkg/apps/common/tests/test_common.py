# apps/common/tests/test_common.py
import pytest

from apps.cli.configs import SweepConfigs
from apps.common.configs import StableConfigs
from apps.common.enums import Pauli
from apps.common.exceptions import (
    InfeasibleError,
    InputError,
    InvalidDistance,
    NoValidAssignment,
    StableError,
    TooSmall,
)


class _Sample(StableConfigs):
    SECTION = "SAMPLE"
    DEFAULT_CONFIG = {"ATTEMPTS": 3, "NAME": "sample"}


class TestConfigs:
    def test_defaults_without_section(self):
        assert _Sample.get_config() == {"ATTEMPTS": 3, "NAME": "sample"}

    def test_settings_override_defaults(self, settings):
        settings.STABLE_CONFIG = {"SAMPLE": {"ATTEMPTS": 9}}
        assert _Sample.get("ATTEMPTS") == 9
        assert _Sample.get("NAME") == "sample"

    def test_project_sweep_section(self):
        assert SweepConfigs.get("CSV_COLUMNS")[:5] == ["d", "q", "kind", "bound", "value"]


class TestExceptions:
    @pytest.mark.parametrize("error", [InvalidDistance, InputError])
    def test_input_errors_are_value_errors(self, error):
        assert issubclass(error, ValueError)
        assert issubclass(error, StableError)

    @pytest.mark.parametrize("error", [TooSmall, NoValidAssignment])
    def test_infeasible_errors(self, error):
        assert issubclass(error, InfeasibleError)
        assert not issubclass(error, InputError)


class TestPauli:
    @pytest.mark.parametrize("pauli", list(Pauli))
    def test_bits_round_trip(self, pauli):
        assert Pauli.from_bits(*pauli.to_bits()) is pauli

    def test_probability_index(self):
        assert [p.index for p in (Pauli.I, Pauli.X, Pauli.Y, Pauli.Z)] == [0, 1, 2, 3]
