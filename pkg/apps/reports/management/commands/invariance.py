from django.conf import settings

from apps.transforms.local_unitary import invariance_check
from core.decorators import timed
from core.exceptions import EXIT_INCONCLUSIVE, InputError

from ..base import SqueezingCommand


class Command(SqueezingCommand):
    help = 'Check that ξ̃₁, ξ̃₂ and <J_0> are unchanged by random local unitaries'

    def add_command_arguments(self, parser):
        parser.add_argument('state_path', help='JSON state file')
        parser.add_argument('--trials', type=int, default=10, help='Number of random local-unitary layers')

    @timed('invariance')
    def run(self, **options):
        if options['trials'] < 1:
            raise InputError(f"--trials must be at least 1, got {options['trials']}", code="INVALID_TRIALS")
        loaded = self.load_state(options['state_path'])
        config = self.minimizer_config(options)
        result = invariance_check(loaded.state, options['trials'], config.seed, config)

        tolerance = settings.SQUEEZING['INVARIANCE_TOLERANCE']
        status = 'PASS' if result.passed else 'FAIL'
        self.stdout.write(
            f"max deviation {result.max_deviation:.17g} over {result.trials} trials "
            f"(tolerance {tolerance:g}; <J0> deviation {result.max_j0_deviation:.3e}) {status}"
        )
        if not result.passed:
            raise SystemExit(EXIT_INCONCLUSIVE)
