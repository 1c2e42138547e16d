"""
Exact analysis of (1, b, c, b, 1) and (1, b, c, c, b, 1).
"""
from django.core.management.base import CommandError

from ssnn_roots.batch import make_records
from ssnn_roots.management.commands._base import BatchCommand
from ssnn_roots.utils import parse_rational


class Command(BatchCommand):
    help = 'Classify (b, c) for degree 4 or 5 and check the real-part bound.'
    command = 'quartic'

    def add_check_arguments(self, parser):
        pass

    def add_command_arguments(self, parser):
        parser.add_argument('--d', type=int, choices=(4, 5), required=True, dest='degree')
        parser.add_argument('--b', required=True)
        parser.add_argument('--c', required=True)

    def get_records(self, options):
        try:
            b, c = parse_rational(options['b']), parse_rational(options['c'])
        except (ValueError, ZeroDivisionError) as error:
            raise CommandError(str(error))
        return make_records([{'b': b, 'c': c, 'd': options['degree']}])
