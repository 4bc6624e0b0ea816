# apps/cli/management/commands/stab2graph.py
from typing import Any

import structlog
from django.core.management.base import CommandParser

from apps.cli.base import StableCommand
from apps.cli.services import parse_pair, read_json
from apps.codes.assignment import code_conversion
from apps.codes.lattice import build_seven_qubit, build_square_hexagonal
from apps.common.enums import ControlBasis
from apps.graphs.paths import as_generator
from apps.stab.conversion import GraphConversionResult, stab_to_graph
from apps.stab.tableau import StabilizerTableau

logger = structlog.get_logger(__name__)


def _labels(qubits: tuple[int, ...]) -> str:
    return ",".join(str(q + 1) for q in qubits) or "-"


class Command(StableCommand):
    help = "Converts a stabilizer state to a local-Clifford-equivalent graph state."

    def add_arguments(self, parser: CommandParser) -> None:
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument("--tableau", type=str, help="Tableau JSON file.")
        source.add_argument(
            "--seven-qubit", action="store_true", help="Logical |+> of the 7-qubit code."
        )
        source.add_argument(
            "--distance", type=int, help="Logical |+> of the square-hexagonal code."
        )
        parser.add_argument(
            "--seed", type=int, default=None, help="Randomizes the control choice."
        )
        parser.add_argument(
            "--force-pair",
            type=int,
            nargs=2,
            default=None,
            metavar=("A", "B"),
            help="Ask for a control A linked to the target B (1-based).",
        )
        parser.add_argument(
            "--control-basis",
            choices=[b.value for b in ControlBasis],
            default=ControlBasis.X.value,
            help="Tableau input only: x puts the Hadamards on the targets, z on the controls.",
        )
        parser.add_argument("--out", type=str, default=None, help="Output JSON path.")

    def _convert(self, options: dict[str, Any]) -> GraphConversionResult:
        seed = options["seed"]
        if options["tableau"]:
            t = StabilizerTableau.from_json(read_json(options["tableau"]))
            forced = options["force_pair"]
            return stab_to_graph(
                t,
                control_basis=ControlBasis(options["control_basis"]),
                forced_pair=parse_pair(*forced, t.n_qubits) if forced else None,
                rng=None if seed is None else as_generator(seed),
            )
        if options["seven_qubit"]:
            lattice = build_seven_qubit()
        else:
            lattice = build_square_hexagonal(options["distance"])
        forced = options["force_pair"]
        return code_conversion(
            lattice,
            seed=seed,
            forced_pair=parse_pair(*forced, lattice.n_qubits) if forced else None,
        )

    def run(self, **options: Any) -> None:
        result = self._convert(options)
        graph = result.graph
        payload = {
            **graph.to_json(),
            "controls": [q + 1 for q in result.controls],
            "targets": [q + 1 for q in result.targets],
            "unitary": result.unitary.labels(),
        }
        logger.info("graph conversion", n_qubits=graph.n, n_controls=len(result.controls))
        self.emit(payload, options["out"])
        self.stdout.write(f"controls: {_labels(result.controls)}")
        self.stdout.write(f"targets: {_labels(result.targets)}")
        changed = result.unitary.nontrivial_qubits()
        self.stdout.write(
            "unitary: identity"
            if not changed
            else "unitary: " + " ".join(f"{q + 1}:{result.unitary.labels()[q]}" for q in changed)
        )
