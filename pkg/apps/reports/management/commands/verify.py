from core.decorators import timed
from core.exceptions import EXIT_INCONCLUSIVE

from ...verification import VerificationSuite
from ..base import SqueezingCommand


class Command(SqueezingCommand):
    help = 'Run the built-in verification checks; exits 1 if any check fails'

    def add_command_arguments(self, parser):
        parser.add_argument('--quick', action='store_true', help='Use small sample sizes')

    @timed('verify')
    def run(self, **options):
        suite = VerificationSuite(
            config=self.minimizer_config(options),
            quick=options['quick'],
            write=self.stdout.write,
        )
        if not suite.run_all():
            raise SystemExit(EXIT_INCONCLUSIVE)
