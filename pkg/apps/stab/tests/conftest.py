# apps/stab/tests/conftest.py
import pytest

from apps.stab.tableau import StabilizerTableau

SEVEN_QUBIT_PLAQUETTES = ("XXXXIII", "IXXIXXI", "IIXXIXX")


@pytest.fixture
def bell():
    return StabilizerTableau.from_labels(["XX", "ZZ"])


@pytest.fixture
def seven_qubit_plus():
    """|+>_L of the 7-qubit color code: X and Z plaquettes plus the all-X logical string."""
    z_plaquettes = [p.replace("X", "Z") for p in SEVEN_QUBIT_PLAQUETTES]
    return StabilizerTableau.from_labels([*SEVEN_QUBIT_PLAQUETTES, *z_plaquettes, "XXXXXXX"])
