"""
Solve every delta-vector read from the input.
"""
from ssnn_roots.management.commands._base import InputCommand


class Command(InputCommand):
    help = 'Compute all complex roots of each delta-vector record, with error radii.'
    command = 'roots'
    default_checks = ()

    def add_check_arguments(self, parser):
        pass
