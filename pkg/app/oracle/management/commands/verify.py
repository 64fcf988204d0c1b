"""
Django command running the identity suite and the oracle-equivalence sweep
"""
from django.core.management.base import BaseCommand, CommandError

from core.cli import EXIT_FAILURE, EXIT_MALFORMED
from core.conf import tolerance, vhk_setting
from core.reports import build_report, write_report
from core.sampling import SPACE_TAGS
from core.serializers import GridFunctionSerializer, render_document
from oracle.identities import COUNTING
from oracle.sweep import run_verification

COLUMNS = (COUNTING, *SPACE_TAGS)


def counterexample(check):
    """The first failing check as a JSON-ready dict"""
    if check is None:
        return None
    data = {
        'family': check.family,
        'space': check.space,
        'instance': check.instance,
        'detail': check.detail,
    }
    if check.witness is not None:
        data['function'] = GridFunctionSerializer(check.witness).data
    return data


def format_matrix(matrix):
    width = max(len(family) for family in matrix) + 2
    cell = max(len(column) for column in COLUMNS) + 2
    lines = [''.ljust(width) + ''.join(c.ljust(cell) for c in COLUMNS)]
    for family, row in matrix.items():
        lines.append(family.ljust(width) + ''.join(
            row.get(column, '-').ljust(cell) for column in COLUMNS))
    return [line.rstrip() for line in lines]


class Command(BaseCommand):
    """Django command for the verification matrix"""
    help = 'Check the identity families and engine-vs-oracle equivalence.'

    def add_arguments(self, parser):
        parser.add_argument('--n-max', type=int, default=3)
        parser.add_argument('--m-max', type=int, default=8)
        parser.add_argument('--trials', type=int, default=5)
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--grid-cap', type=int, default=3,
                            help='most points per axis in the sweep')
        parser.add_argument('--tolerance', type=float, default=None)
        parser.add_argument('--json', dest='json_out', default=None)

    def _check_bounds(self, options):
        if not 1 <= options['n_max'] <= vhk_setting('VERIFY_MAX_DIMENSION'):
            raise CommandError(
                f'dimension cap exceeded: --n-max {options["n_max"]} outside '
                f'1..{vhk_setting("VERIFY_MAX_DIMENSION")}',
                returncode=EXIT_MALFORMED)
        if not 1 <= options['m_max'] <= vhk_setting('VERIFY_MAX_ORDER'):
            raise CommandError(
                f'order cap exceeded: --m-max {options["m_max"]} outside '
                f'1..{vhk_setting("VERIFY_MAX_ORDER")}',
                returncode=EXIT_MALFORMED)
        if options['trials'] < 1 or options['grid_cap'] < 2:
            raise CommandError(
                '--trials must be at least 1 and --grid-cap at least 2',
                returncode=EXIT_MALFORMED)

    def handle(self, *args, **options):
        """Entry point for the command"""
        self._check_bounds(options)
        tol = tolerance(options['tolerance'])
        report = run_verification(
            options['n_max'], options['m_max'], options['trials'],
            options['seed'], options['grid_cap'], tol)

        matrix = report.matrix()
        for line in format_matrix(matrix):
            self.stdout.write(line)

        first = counterexample(report.first_failure)
        results = {
            'n_max': options['n_max'],
            'm_max': options['m_max'],
            'trials': options['trials'],
            'grid_cap': options['grid_cap'],
            'matrix': matrix,
            'checks': len(report.checks),
            'failed': len(report.failures),
            'first_counterexample': first,
        }
        if options['json_out']:
            write_report(
                build_report('verify', [], results, tol, seed=options['seed']),
                options['json_out'])

        if first is not None:
            self.stdout.write('first counterexample:')
            self.stdout.write(render_document(first).decode('utf-8'))
            raise CommandError(
                f'{len(report.failures)} of {len(report.checks)} checks '
                f'failed (seed {options["seed"]})', returncode=EXIT_FAILURE)
        self.stdout.write(self.style.SUCCESS(
            f'all {len(report.checks)} checks passed (seed {options["seed"]})'))
