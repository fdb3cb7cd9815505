from apps.states.factory import FamilySpec, build
from apps.states.storage import dumps_state, write_state_file
from core.decorators import timed

from ..base import SqueezingCommand, parse_assignments

SEEDED_FAMILIES = {'separable_random', 'pure_random'}


class Command(SqueezingCommand):
    help = 'Write the state file of a named family'
    uses_minimizer = False

    def add_command_arguments(self, parser):
        parser.add_argument('--family', required=True, help='State family name')
        parser.add_argument('--param', action='append', default=[], metavar='NAME=VALUE',
                            help='Family parameter, repeatable')

    @timed('build')
    def run(self, **options):
        params = parse_assignments(options['param'])
        if options['family'] in SEEDED_FAMILIES and 'seed' not in params:
            params['seed'] = self.minimizer_config(options).seed
        spec = FamilySpec(family=options['family'], params=params)
        state = build(spec)
        if options['out']:
            digest = write_state_file(options['out'], state, spec)
            self.stdout.write(f"{options['out']} {digest}")
        else:
            self.stdout.write(dumps_state(state, spec), ending='')
