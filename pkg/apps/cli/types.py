from dataclasses import asdict, dataclass
from typing import Any


@dataclass(frozen=True)
class SweepRow:
    """
    One (d, q) cell of a bound sweep. Fields that do not apply to the bound stay None and are
    written as empty CSV cells.
    """

    d: int
    q: float
    kind: str
    bound: str
    value: float
    n_x: int | None = None
    n_z: int | None = None
    n_min: int | None = None
    n_lc_mean: float | None = None
    n_samples: int | None = None
    seed: int | None = None

    def __post_init__(self) -> None:
        if not (0.0 <= self.value <= 1.0):
            raise ValueError(f"bound value {self.value} outside [0, 1]")
        if self.d < 1:
            raise ValueError("lattice distance must be positive")

    @property
    def sort_key(self) -> tuple[int, float, str, str]:
        return self.d, self.q, self.kind, self.bound

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class DecayFit:
    """ln(value) = a_prime + b·d for one (kind, bound, q) group."""

    kind: str
    bound: str
    q: float
    a_prime: float
    b: float
    a_prime_error: float
    b_error: float
    n_points: int

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)
