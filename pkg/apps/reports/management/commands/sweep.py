from apps.states.factory import FamilySpec
from core.decorators import timed

from ...documents import JSON
from ...sweep import render_sweep_csv, render_sweep_json, run_sweep
from ..base import SqueezingCommand, parse_assignments


class Command(SqueezingCommand):
    help = 'Sweep one parameter of a state family and tabulate the squeezing parameters'
    default_report = 'csv'

    def add_command_arguments(self, parser):
        parser.add_argument('--family', required=True, help='State family name')
        parser.add_argument('--param', required=True, help='Parameter to sweep')
        parser.add_argument('--from', dest='start', type=float, required=True, help='First value')
        parser.add_argument('--to', dest='stop', type=float, required=True, help='Last value (inclusive)')
        parser.add_argument('--steps', type=int, required=True, help='Number of values')
        parser.add_argument('--set', dest='fixed', action='append', default=[], metavar='NAME=VALUE',
                            help='Fixed family parameter, repeatable')

    @timed('sweep')
    def run(self, **options):
        base = FamilySpec(family=options['family'], params=parse_assignments(options['fixed'], '--set'))
        config = self.minimizer_config(options)
        rows = run_sweep(base, options['param'], options['start'], options['stop'], options['steps'], config)
        text = render_sweep_json(rows) if options['report'] == JSON else render_sweep_csv(rows)
        self.emit(text, options)
