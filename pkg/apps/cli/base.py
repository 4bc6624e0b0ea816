# apps/cli/base.py
from typing import Any

import structlog
from django.core.management.base import BaseCommand, CommandError

from apps.common.exceptions import InfeasibleError, InputError

from .services import dump_json, write_json

logger = structlog.get_logger(__name__)

INPUT_ERROR_CODE = 2
INFEASIBLE_CODE = 3


class StableCommand(BaseCommand):
    """
    Base for the stable commands: subclasses implement ``run`` and domain errors become
    CommandError with exit code 2 (bad input) or 3 (no solution on this instance).
    """

    def run(self, **options: Any) -> None:
        raise NotImplementedError

    def handle(self, *args: Any, **options: Any) -> None:
        try:
            self.run(**options)
        except InputError as exc:
            logger.info("command rejected input", command=self.__module__, error=str(exc))
            raise CommandError(str(exc), returncode=INPUT_ERROR_CODE) from exc
        except InfeasibleError as exc:
            logger.warning("command infeasible", command=self.__module__, error=str(exc))
            raise CommandError(str(exc), returncode=INFEASIBLE_CODE) from exc
        except OSError as exc:
            raise CommandError(str(exc), returncode=INPUT_ERROR_CODE) from exc

    def emit(self, payload: dict[str, Any], out: str | None) -> None:
        """Writes JSON to ``out`` or, without a path, to stdout."""
        if out:
            write_json(payload, out)
            self.stdout.write(self.style.SUCCESS(f"wrote {out}"))
        else:
            self.stdout.write(dump_json(payload), ending="")
