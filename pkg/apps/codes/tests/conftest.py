# apps/codes/tests/conftest.py
import pytest

from apps.codes.lattice import build_seven_qubit, build_square_hexagonal


@pytest.fixture
def seven_qubit():
    return build_seven_qubit()


@pytest.fixture
def lattice_d4():
    return build_square_hexagonal(4)


@pytest.fixture
def lattice_d8():
    return build_square_hexagonal(8)


@pytest.fixture(scope="module")
def lattice_d12():
    return build_square_hexagonal(12)
