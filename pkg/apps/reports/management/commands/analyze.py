from apps.squeezing.engine import xi_tilde
from core.decorators import timed

from ...documents import build_document, render
from ..base import SqueezingCommand, Stopwatch


class Command(SqueezingCommand):
    help = 'Compute ξ̃₁, ξ̃₂ and the collective ξ₁, ξ₂ of a state file'

    def add_command_arguments(self, parser):
        parser.add_argument('state_path', help='JSON state file')

    @timed('analyze')
    def run(self, **options):
        stopwatch = Stopwatch()
        loaded = self.load_state(options['state_path'])
        config = self.minimizer_config(options)
        report = xi_tilde(loaded.state, config)
        document = build_document(
            report, config, input_digest=loaded.digest,
            timing_ms=stopwatch.elapsed_ms() if options['timing'] else None,
        )
        self.emit(render(document, options['report']), options)
