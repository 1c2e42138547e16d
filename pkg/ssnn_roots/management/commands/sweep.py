"""
Sweeps over (b, c), random or on a grid, or over random symmetric delta-vectors.
"""
from django.core.management.base import CommandError

from ssnn_roots.analysis import admissible_grid, sample_admissible
from ssnn_roots.batch import CHECK_FUNCTIONAL_EQUATION, CHECK_REAL_STRIP, make_records, random_symmetric_delta
from ssnn_roots.management.commands._base import BatchCommand


class Command(BatchCommand):
    help = ('Run the quartic analysis on random or gridded admissible (b, c), '
            'or verify random symmetric delta-vectors.')
    default_checks = (CHECK_FUNCTIONAL_EQUATION, CHECK_REAL_STRIP)

    def add_command_arguments(self, parser):
        parser.add_argument('--mode', choices=('quartic', 'delta'), default='delta')
        parser.add_argument('--d', type=int, choices=(4, 5), default=4, dest='degree')
        parser.add_argument('--max-degree', type=int, default=10, dest='max_degree')
        parser.add_argument('--count', type=int, default=100)
        parser.add_argument('--allow-zero-head', action='store_true', dest='allow_zero_head')
        parser.add_argument('--grid', action='store_true',
                            help='quartic mode: every admissible grid point instead of random samples')
        parser.add_argument('--b-range', nargs=2, default=['0', '20'], dest='b_range', metavar=('LO', 'HI'))
        parser.add_argument('--c-range', nargs=2, default=['0', '200'], dest='c_range', metavar=('LO', 'HI'))
        parser.add_argument('--step', default='1', help='grid spacing "p/q"')

    def get_command(self, options):
        return 'quartic' if options['mode'] == 'quartic' else 'verify'

    def grid_points(self, options):
        try:
            return list(admissible_grid(options['degree'], options['b_range'], options['c_range'], options['step']))
        except (ValueError, ZeroDivisionError) as error:
            raise CommandError(str(error))

    def get_records(self, options):
        if options.get('grid') and options['mode'] != 'quartic':
            raise CommandError("--grid applies to --mode quartic")
        if options['mode'] == 'quartic':
            if options.get('grid'):
                points = self.grid_points(options)
            else:
                rng = self.rng(options)
                points = [sample_admissible(options['degree'], rng) for _ in range(options['count'])]
            return make_records({'b': b, 'c': c, 'd': options['degree']} for b, c in points)
        rng = self.rng(options)
        return make_records(
            {'delta': random_symmetric_delta(rng, options['max_degree'], options['allow_zero_head'])}
            for _ in range(options['count'])
        )
