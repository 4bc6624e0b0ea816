from dataclasses import asdict, dataclass, field
from typing import Any

from apps.common.enums import Pauli


@dataclass(frozen=True)
class MlbResult:
    """
    A measurement-based bound together with the setting that realizes it on the original state
    and the provenance of the graph it was evaluated on.
    """

    value: float
    setting: dict[int, Pauli]
    n: int
    pair: tuple[int, int]
    n_lc: int = 0
    link_operations: int = 0
    path: tuple[int, ...] = ()
    controls: tuple[int, ...] = ()
    seed: int | None = None
    sample: int = 0
    n_samples: int = 1
    n_min: int | None = None
    n_lc_mean: float | None = None
    link_operations_mean: float | None = None
    seconds_mean: float | None = None
    extras: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not (-1e-12 <= self.value <= 1.0 + 1e-12):
            raise ValueError(f"MLB value {self.value} outside [0, 1]")
        if set(self.pair) & set(self.setting):
            raise ValueError("the measurement setting must not touch the pair")
        if any(p is Pauli.I for p in self.setting.values()):
            raise ValueError("every measured qubit needs an X, Y or Z basis")

    def setting_labels(self) -> dict[int, str]:
        """1-based qubit labels mapped to the measured axis."""
        return {q + 1: p.value for q, p in sorted(self.setting.items())}

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["setting"] = self.setting_labels()
        data["pair"] = [q + 1 for q in self.pair]
        data["path"] = [q + 1 for q in self.path]
        data["controls"] = [q + 1 for q in self.controls]
        return data
