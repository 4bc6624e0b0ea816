# apps/cli/management/commands/alc.py
from typing import Any

import structlog
from django.core.management.base import CommandParser

from apps.cli.base import StableCommand
from apps.cli.services import parse_pair, parse_path, read_json
from apps.graphs.alc import alc_create_link
from apps.graphs.graph import Graph
from apps.graphs.paths import random_simple_path, shortest_path

logger = structlog.get_logger(__name__)


class Command(StableCommand):
    help = "Creates the link (a, b) by adaptive local complementation along a path."

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("graph", type=str, help="Graph JSON file.")
        parser.add_argument("a", type=int, help="First endpoint (1-based).")
        parser.add_argument("b", type=int, help="Second endpoint (1-based).")
        path = parser.add_mutually_exclusive_group()
        path.add_argument(
            "--seed", type=int, default=None, help="Samples a random simple path from a to b."
        )
        path.add_argument("--path", type=str, default=None, help='Explicit path, e.g. "1,4,9".')
        parser.add_argument("--out", type=str, default=None, help="Output JSON path.")

    def run(self, **options: Any) -> None:
        g = Graph.from_json(read_json(options["graph"]))
        a, b = parse_pair(options["a"], options["b"], g.n)
        if options["path"]:
            p = parse_path(options["path"])
        elif options["seed"] is not None:
            p = random_simple_path(g, a, b, options["seed"])
        else:
            p = shortest_path(g, a, b)
        linked, record = alc_create_link(g, a, b, p)
        logger.info("link created", pair=(a, b), n_lc=record.n_lc)
        payload = {
            **linked.to_json(),
            "lc": {
                "nodes": [v + 1 for v in record.nodes],
                "n_lc": record.n_lc,
                "link_operations": record.link_operations,
                "path": [v + 1 for v in record.path.nodes],
                "unitary": record.unitary.labels(),
            },
        }
        self.emit(payload, options["out"])
        self.stdout.write(f"n_LC={record.n_lc} link_operations={record.link_operations}")
        self.stdout.write("nodes: " + ",".join(str(v + 1) for v in record.nodes))
