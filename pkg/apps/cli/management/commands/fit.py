# apps/cli/management/commands/fit.py
from typing import Any

from django.core.management.base import CommandParser

from apps.cli.base import StableCommand
from apps.cli.services import fit_decay, read_sweep_csv, write_json


class Command(StableCommand):
    help = "Fits ln(value) = a' + b·d to a sweep CSV, one fit per (kind, bound, q)."

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("csv", type=str, help="Sweep CSV written by the sweep command.")
        parser.add_argument("--out", type=str, default=None, help="Optional JSON output path.")

    def run(self, **options: Any) -> None:
        fits = fit_decay(read_sweep_csv(options["csv"]))
        for fit in fits:
            trend = "decaying" if fit.b < 0 else "not decaying"
            self.stdout.write(
                f"{fit.kind} {fit.bound} q={fit.q:g}: "
                f"a'={fit.a_prime:.6g}±{fit.a_prime_error:.2g} "
                f"b={fit.b:.6g}±{fit.b_error:.2g} ({trend}, {fit.n_points} points)"
            )
        if options["out"]:
            write_json({"fits": [fit.to_dict() for fit in fits]}, options["out"])
            self.stdout.write(self.style.SUCCESS(f"wrote {options['out']}"))
