"""
Reproduce the published degree 8 and 10 vectors.
"""
from ssnn_roots.batch import make_records
from ssnn_roots.catalog import counterexample_deltas
from ssnn_roots.management.commands._base import BatchCommand


class Command(BatchCommand):
    help = 'Solve the degree 8 counterexample and the degree 10 candidate and check them against the half strip.'
    command = 'counterexample'

    def get_records(self, options):
        return make_records({'delta': entry.delta, 'entry': entry} for entry in counterexample_deltas())
