"""
Shared plumbing for the tsirelson management commands.

Errors map onto exit statuses: a failed check exits with 1, malformed input
with 2 and a solver breakdown with 3.
"""
import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from tsirelson import conf
from tsirelson.certificates import LEVEL_TAGS
from tsirelson.exceptions import InputError, SolverError

logger = logging.getLogger(__name__)

CHECK_FAILED = 1
BAD_INPUT = 2
SOLVER_FAILED = 3


class TsirelsonCommand(BaseCommand):
    """Base command: subclasses implement ``run`` instead of ``handle``."""

    requires_system_checks = []

    def add_level_argument(self, parser, default="L1AB"):
        parser.add_argument(
            "--level",
            type=str,
            choices=LEVEL_TAGS,
            default=default,
            help=f"Relaxation level (default: {default})"
        )

    def add_seed_argument(self, parser):
        parser.add_argument(
            "--seed",
            type=int,
            default=None,
            help="Seed of the randomized start set (default: TSIRELSON_SCAN_SEED, 0)"
        )

    def add_output_argument(self, parser):
        parser.add_argument(
            "--output",
            type=str,
            default=None,
            help="Write the result to this file instead of stdout"
        )

    def seed(self, options) -> int:
        return conf.get("TSIRELSON_SCAN_SEED") if options.get("seed") is None else options["seed"]

    def emit(self, text: str, options=None):
        """Write a data document to ``--output`` when given, else to stdout."""
        path = (options or {}).get("output")
        if path:
            try:
                Path(path).write_text(text if text.endswith("\n") else text + "\n")
            except OSError as exc:
                raise InputError(f"Cannot write {path}: {exc.strerror}") from exc
            self.stdout.write(self.style.SUCCESS(f"Wrote {path}"))
        else:
            self.stdout.write(text, ending="" if text.endswith("\n") else "\n")

    def fail(self, message: str):
        self.stdout.write(self.style.ERROR(message))
        raise CommandError(message, returncode=CHECK_FAILED)

    def handle(self, *args, **options):
        try:
            self.run(*args, **options)
        except ValueError as exc:
            # InputError is a ValueError; so are contract violations of the arguments.
            logger.debug(f"Rejected input: {exc}")
            raise CommandError(str(exc), returncode=BAD_INPUT) from exc
        except SolverError as exc:
            logger.warning(f"Solver failure: {exc}")
            raise CommandError(str(exc), returncode=SOLVER_FAILED) from exc

    def run(self, *args, **options):
        raise NotImplementedError("subclasses of TsirelsonCommand must provide a run() method")
