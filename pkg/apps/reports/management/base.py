"""
Shared flags, error mapping and output handling for the squeezing commands.
"""

import logging
import time
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from apps.squeezing.config import MinimizerConfig
from apps.states.storage import LoadedState, read_state_file
from core.exceptions import InputError, SqueezingError, exit_code_for

from ..documents import REPORT_FORMATS

logger = logging.getLogger(__name__)


def parse_assignments(values, option='--param'):
    """Parse repeated name=value flags into a dict of floats."""
    params = {}
    for item in values or []:
        name, sep, raw = item.partition('=')
        if not sep or not name:
            raise InputError(f"{option} expects name=value, got {item!r}", code="INVALID_PARAMETER")
        try:
            params[name.strip()] = float(raw)
        except ValueError:
            raise InputError(f"{option} {name} needs a number, got {raw!r}", code="INVALID_PARAMETER")
    return params


class SqueezingCommand(BaseCommand):
    """Base class for every command; subclasses implement run(**options)."""

    requires_system_checks = []
    uses_minimizer = True
    default_report = 'json'

    def add_arguments(self, parser):
        parser.add_argument('--seed', type=int, default=None, help='Seed for every random draw')
        parser.add_argument('--report', choices=REPORT_FORMATS, default=self.default_report,
                            help='Output format')
        parser.add_argument('--out', default=None, help='Write output to this path instead of stdout')
        parser.add_argument('--timing', action='store_true', help='Include timing_ms in documents')
        if self.uses_minimizer:
            parser.add_argument('--restarts', type=int, default=None, help='Minimizer restarts')
            parser.add_argument('--workers', type=int, default=None, help='Threads for restarts and trials')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        try:
            self.run(**options)
        except SqueezingError as e:
            logger.error(f"{self.__module__.rsplit('.', 1)[-1]} failed with {e.code}: {e.message}")
            raise CommandError(f"{e.code}: {e.message}", returncode=exit_code_for(e))

    def run(self, **options):
        raise NotImplementedError

    def minimizer_config(self, options) -> MinimizerConfig:
        return MinimizerConfig.from_settings(
            seed=options.get('seed'),
            n_restarts=options.get('restarts'),
            workers=options.get('workers'),
        )

    def load_state(self, path) -> LoadedState:
        loaded = read_state_file(path)
        logger.info(f"Loaded {loaded.state.n_qubits}-qubit {loaded.state.kind} state from {path} ({loaded.digest})")
        return loaded

    def emit(self, text, options):
        """Write command output to --out or stdout."""
        out = options.get('out')
        if out:
            try:
                Path(out).write_text(text, encoding='utf-8')
            except OSError as e:
                raise InputError(f"Cannot write {out}: {e}", code="OUTPUT_NOT_WRITABLE")
            logger.info(f"Wrote {out}")
        else:
            self.stdout.write(text, ending='')


class Stopwatch:
    """Milliseconds since construction, for --timing."""

    def __init__(self):
        self.started = time.perf_counter()

    def elapsed_ms(self) -> float:
        return (time.perf_counter() - self.started) * 1000.0
