from apps.entanglement.witness import witness
from apps.squeezing.engine import xi_tilde
from core.decorators import timed
from core.exceptions import EXIT_INCONCLUSIVE
from core.utils import format_number

from ...documents import build_document, render
from ..base import SqueezingCommand, Stopwatch


class Command(SqueezingCommand):
    help = 'Certify entanglement when ξ̃₂ < 1; exits 0 for ENTANGLED and 1 for INCONCLUSIVE'

    def add_command_arguments(self, parser):
        parser.add_argument('state_path', help='JSON state file')

    @timed('witness')
    def run(self, **options):
        stopwatch = Stopwatch()
        loaded = self.load_state(options['state_path'])
        config = self.minimizer_config(options)
        report = xi_tilde(loaded.state, config)
        verdict = witness(loaded.state, config, report=report)

        self.stdout.write(f"{verdict.label} xi_tilde_2={format_number(verdict.xi_tilde_2)}")
        self.stdout.write(verdict.note)
        if options['out']:
            document = build_document(
                report, config, input_digest=loaded.digest, verdict=verdict,
                timing_ms=stopwatch.elapsed_ms() if options['timing'] else None,
            )
            self.emit(render(document, options['report']), options)
        if not verdict.entangled_certified:
            raise SystemExit(EXIT_INCONCLUSIVE)
