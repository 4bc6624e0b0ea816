from enum import Enum


class Pauli(Enum):
    I = "I"
    X = "X"
    Y = "Y"
    Z = "Z"

    def to_bits(self) -> tuple[int, int]:
        """Binary (z, x) pair of the single-qubit operator."""
        return _PAULI_BITS[self]

    @classmethod
    def from_bits(cls, z: int, x: int) -> "Pauli":
        return _BITS_PAULI[(int(z) & 1, int(x) & 1)]

    @property
    def index(self) -> int:
        """Position in the (I, X, Y, Z) probability vector."""
        return "IXYZ".index(self.value)


_PAULI_BITS = {Pauli.I: (0, 0), Pauli.X: (0, 1), Pauli.Y: (1, 1), Pauli.Z: (1, 0)}
_BITS_PAULI = {bits: pauli for pauli, bits in _PAULI_BITS.items()}


class NoiseKind(Enum):
    BF = "BF"
    PF = "PF"
    BPF = "BPF"
    DP = "DP"
    CUSTOM = "custom"


class Bound(Enum):
    WLB = "wlb"
    MLB = "mlb"


class Strategy(Enum):
    ALC = "alc"
    DIRECT_LINK = "direct-link"


class PathCategory(Enum):
    C1 = "C1"
    C2 = "C2"


class PlaquetteColor(Enum):
    R = "R"
    G = "G"
    B = "B"


class WitnessLayout(Enum):
    STAIRCASE = "staircase"
    ARMCHAIR = "armchair"


class ControlBasis(Enum):
    X = "x"
    Z = "z"


class GraphSource(Enum):
    CODE = "code"
    LOCAL = "local"


class LatticeFamily(Enum):
    SQUARE_HEXAGONAL = "square-hexagonal"
    SEVEN_QUBIT = "seven-qubit"
