"""
Shared plumbing of the batch commands: run flags, output and exit status.
"""
import fileinput
import random

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from ssnn_roots.batch import (
    CHECK_STRIP,
    CHECKS,
    EXIT_OK,
    BatchOptions,
    emit_plot_data,
    exit_code,
    parse_records,
    run_batch,
    write_reports,
)
from ssnn_roots.exceptions import InvalidConfiguration
from ssnn_roots.roots import SolverConfig
from ssnn_roots.verdicts import HALF_STRIP, STRIP_KINDS

STRIP_NAMES = {'full': 'full_strip', 'half': 'half_strip', 'floor': 'floor_strip'}


class BatchCommand(BaseCommand):
    """
    Base for commands that turn records into reports.

    Subclasses set `command` (the batch action) and implement `get_records`.
    Exit status: 0 when every report passes, 1 when any fails, 2 on errors.
    """
    command = None
    default_checks = (CHECK_STRIP,)

    def add_arguments(self, parser):
        parser.add_argument('--precision', type=int, help='working precision in bits')
        parser.add_argument('--max-iter', type=int, dest='max_iter', help='iteration cap of the solver')
        parser.add_argument('--seed', type=int, help='seed for random generation')
        parser.add_argument('--jobs', type=int, help='worker threads')
        parser.add_argument('--backend', help='dotted path of the solver backend module')
        parser.add_argument('--format', choices=('jsonl', 'csv'), default='jsonl', dest='output_format')
        parser.add_argument('--plot-data', dest='plot_data', help='write TSV scatter data to this path')
        self.add_check_arguments(parser)
        self.add_command_arguments(parser)

    def add_check_arguments(self, parser):
        parser.add_argument('--check', action='append', choices=CHECKS, dest='checks',
                            help='check to run, may be repeated')
        parser.add_argument('--strip', choices=sorted(STRIP_NAMES), default='half')

    def add_command_arguments(self, parser):
        """Hook for subclass specific arguments."""

    def get_records(self, options):
        raise NotImplementedError

    def get_command(self, options):  # pylint: disable=unused-argument
        return self.command

    def seed(self, options):
        return options['seed'] if options.get('seed') is not None else settings.SSNN_ROOTS_SEED

    def rng(self, options):
        return random.Random(self.seed(options))

    def batch_options(self, options):
        try:
            solver = SolverConfig.from_settings(
                precision_bits=options.get('precision'),
                max_iterations=options.get('max_iter'),
                backend=options.get('backend'),
            )
        except InvalidConfiguration as error:
            raise CommandError(str(error))
        jobs = options.get('jobs') or settings.SSNN_ROOTS_JOBS
        return BatchOptions(
            solver=solver,
            checks=tuple(options.get('checks') or self.default_checks),
            strip=STRIP_NAMES.get(options.get('strip'), HALF_STRIP),
            jobs=jobs,
        )

    def read_input(self, files):
        return parse_records(fileinput.input(files=files or ('-',)))

    def handle(self, *args, **options):
        batch_options = self.batch_options(options)
        reports = run_batch(list(self.get_records(options)), self.get_command(options), batch_options)
        write_reports(reports, self.stdout, options['output_format'])
        if options.get('plot_data'):
            kinds = [batch_options.strip] if batch_options.strip in STRIP_KINDS else []
            with open(options['plot_data'], 'w') as plot_file:
                emit_plot_data(reports, plot_file, kinds=kinds)
        code = exit_code(reports)
        if code != EXIT_OK:
            raise CommandError("{} of {} records did not pass".format(
                sum(1 for report in reports if report.status != 'pass'), len(reports)), returncode=code)


class InputCommand(BatchCommand):
    """ Batch command reading delta-vector records from files or stdin. """

    def add_command_arguments(self, parser):
        parser.add_argument('files', nargs='*', help='JSON-lines or CSV input; stdin when empty or "-"')

    def get_records(self, options):
        return self.read_input(options.get('files'))
