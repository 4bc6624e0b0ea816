# apps/cli/management/commands/code.py
from typing import Any

import structlog
from django.core.management.base import CommandParser

from apps.cli.base import StableCommand
from apps.codes.lattice import build_seven_qubit, build_square_hexagonal

logger = structlog.get_logger(__name__)


class Command(StableCommand):
    help = "Builds a color-code lattice and writes its JSON description."

    def add_arguments(self, parser: CommandParser) -> None:
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument("--distance", type=int, help="Square-hexagonal code distance D.")
        source.add_argument("--seven-qubit", action="store_true", help="The 7-qubit color code.")
        parser.add_argument("--out", type=str, default=None, help="Output JSON path.")

    def run(self, **options: Any) -> None:
        if options["seven_qubit"]:
            lattice = build_seven_qubit()
        else:
            lattice = build_square_hexagonal(options["distance"])
        logger.info("lattice built", distance=lattice.distance, n_qubits=lattice.n_qubits)
        self.emit(lattice.to_json(), options["out"])
        self.stdout.write(f"N={lattice.n_qubits} N_p={lattice.n_plaquettes} k={lattice.n_logical}")
