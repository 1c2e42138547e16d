"""
Run strip, norm, functional-equation and real-strip checks over input records.
"""
from ssnn_roots.management.commands._base import InputCommand


class Command(InputCommand):
    help = 'Check root bounds for each delta-vector record.'
    command = 'verify'
