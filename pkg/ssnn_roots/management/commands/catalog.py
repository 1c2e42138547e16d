"""
Check or export the built-in catalog.
"""
from ssnn_roots.batch import make_records
from ssnn_roots.catalog import binomial_boundary_entries, export_catalog, gorenstein_deltas
from ssnn_roots.management.commands._base import BatchCommand


class Command(BatchCommand):
    help = 'Run checks over the Gorenstein Fano delta-vectors of dimension 2 or 3, or export the catalog.'
    command = 'catalog'

    def add_command_arguments(self, parser):
        parser.add_argument('--dim', type=int, choices=(2, 3), default=2)
        parser.add_argument('--with-boundary', action='store_true', dest='with_boundary',
                            help='include the delta_0 = 0 boundary vectors')
        parser.add_argument('--export', help='write the catalog as versioned JSON to this path and exit')

    def get_records(self, options):
        entries = gorenstein_deltas(options['dim'])
        if options.get('with_boundary'):
            entries += binomial_boundary_entries(options['dim'])
        return make_records({'delta': entry.delta, 'entry': entry} for entry in entries)

    def handle(self, *args, **options):
        if options.get('export'):
            count = export_catalog(options['export'])
            self.stderr.write("exported {} entries to {}".format(count, options['export']))
            return
        super().handle(*args, **options)
