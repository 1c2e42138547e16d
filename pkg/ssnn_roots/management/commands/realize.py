"""
Build an SSNN polynomial with a prescribed real root.
"""
import re

from django.core.management.base import CommandError

from ssnn_roots.batch import make_records
from ssnn_roots.management.commands._base import BatchCommand

# argparse only knows -3 and -0.5 as negative numbers; targets also come as -6/5.
NEGATIVE_NUMBER = re.compile(r'^-\d+(/\d+)?$|^-\d*\.\d+$')


class Command(BatchCommand):
    help = 'Find the family member of degree d having the given real root.'
    command = 'realize'

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser._negative_number_matcher = NEGATIVE_NUMBER  # pylint: disable=protected-access
        return parser

    def add_check_arguments(self, parser):
        pass

    def add_command_arguments(self, parser):
        parser.add_argument('--d', type=int, required=True, dest='degree')
        parser.add_argument('--target', action='append', required=True, dest='targets',
                            help='rational root "p/q" such as -6/5, may be repeated')
        parser.add_argument('--approximate', action='store_true',
                            help='read targets as floats (irrational targets)')

    def get_records(self, options):
        payloads = []
        for target in options['targets']:
            if options.get('approximate'):
                try:
                    target = float(target)
                except ValueError:
                    raise CommandError("target {!r} is not a number".format(target))
            payloads.append({'d': options['degree'], 'target': target})
        return make_records(payloads)
