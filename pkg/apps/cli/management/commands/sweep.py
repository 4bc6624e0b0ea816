# apps/cli/management/commands/sweep.py
from typing import Any

import structlog
import yaml
from django.core.management.base import CommandParser

from apps.cli.base import StableCommand
from apps.cli.configs import SweepConfigs
from apps.cli.services import parse_pair, run_sweep, sweep_frame, write_sweep_csv
from apps.codes.lattice import build_seven_qubit, build_square_hexagonal
from apps.common.enums import Bound, GraphSource, NoiseKind, Strategy, WitnessLayout
from apps.common.exceptions import InputError

logger = structlog.get_logger(__name__)

# applied after the YAML layer, for flags given neither on the command line nor in --config
FLAG_DEFAULTS: dict[str, Any] = {
    "bound": None,
    "distance": None,
    "seven_qubit": False,
    "pair": [],
    "d": [],
    "kind": [NoiseKind.DP.value],
    "q": [0.01],
    "n_samples": 1,
    "strategy": Strategy.ALC.value,
    "seed": None,
    "graph": GraphSource.CODE.value,
    "layout": WitnessLayout.STAIRCASE.value,
    "threads": None,
    "out": None,
}


def load_config(path: str | None) -> dict[str, Any]:
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as handle:
            config = yaml.safe_load(handle) or {}
    except (OSError, yaml.YAMLError) as exc:
        raise InputError(f"cannot read sweep config {path}: {exc}") from exc
    if not isinstance(config, dict):
        raise InputError(f"sweep config {path} must be a mapping")
    unknown = set(config) - set(FLAG_DEFAULTS)
    if unknown:
        raise InputError(f"unknown sweep config keys {sorted(unknown)}")
    return config


def merge_options(options: dict[str, Any], config: dict[str, Any]) -> dict[str, Any]:
    """Command-line flags win over YAML values, which win over FLAG_DEFAULTS."""
    merged = dict(FLAG_DEFAULTS)
    merged.update(config)
    for key in FLAG_DEFAULTS:
        value = options.get(key)
        if value is not None and value is not False and value != []:
            merged[key] = value
    return merged


class Command(StableCommand):
    help = "Sweeps the witness or measurement-based bound over (d, q) and writes a CSV."

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--config", type=str, default=None, help="YAML file of flag defaults.")
        parser.add_argument("--bound", choices=[b.value for b in Bound], default=None)
        parser.add_argument("--distance", type=int, default=None, help="Code distance D.")
        parser.add_argument("--seven-qubit", action="store_true", help="Use the 7-qubit code.")
        parser.add_argument(
            "--pair",
            type=int,
            nargs=2,
            action="append",
            default=None,
            metavar=("A", "B"),
            help="Explicit pair (1-based); repeatable. Without it canonical bulk pairs are used.",
        )
        parser.add_argument("--d", type=int, nargs="+", default=None, help="Lattice distances.")
        parser.add_argument(
            "--kind",
            nargs="+",
            default=None,
            choices=[k.value for k in NoiseKind if k is not NoiseKind.CUSTOM],
        )
        parser.add_argument("--q", type=float, nargs="+", default=None, help="Noise strengths.")
        parser.add_argument("--n-samples", type=int, default=None)
        parser.add_argument("--strategy", choices=[s.value for s in Strategy], default=None)
        parser.add_argument("--seed", type=int, default=None, help="Required for --bound mlb.")
        parser.add_argument("--graph", choices=[g.value for g in GraphSource], default=None)
        parser.add_argument("--layout", choices=[w.value for w in WitnessLayout], default=None)
        parser.add_argument("--threads", type=int, default=None, help="Parallel sweep cells.")
        parser.add_argument("--out", type=str, default=None, help="Output CSV path.")

    def run(self, **options: Any) -> None:
        merged = merge_options(options, load_config(options.get("config")))
        if merged["bound"] is None:
            raise InputError("--bound is required")
        try:
            bound = Bound(merged["bound"])
            kinds = [NoiseKind(k) for k in merged["kind"]]
            strategy = Strategy(merged["strategy"])
            source = GraphSource(merged["graph"])
            layout = WitnessLayout(merged["layout"])
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        if merged["seven_qubit"]:
            lattice = build_seven_qubit()
        elif merged["distance"] is not None:
            lattice = build_square_hexagonal(int(merged["distance"]))
        else:
            raise InputError("--distance or --seven-qubit is required")

        rows = run_sweep(
            lattice,
            bound,
            kinds,
            [float(q) for q in merged["q"]],
            ds=[int(d) for d in merged["d"]],
            pairs=[parse_pair(int(a), int(b), lattice.n_qubits) for a, b in merged["pair"]],
            layout=layout,
            strategy=strategy,
            n_samples=int(merged["n_samples"]),
            seed=merged["seed"],
            source=source,
            n_jobs=merged["threads"],
        )
        if merged["out"]:
            write_sweep_csv(rows, merged["out"])
            self.stdout.write(self.style.SUCCESS(f"{len(rows)} rows written to {merged['out']}"))
        else:
            digits = SweepConfigs.get("FLOAT_DIGITS")
            self.stdout.write(
                sweep_frame(rows).to_csv(index=False, float_format=f"%.{digits}g", na_rep=""),
                ending="",
            )
        logger.info("sweep command done", bound=bound.value, n_rows=len(rows))
