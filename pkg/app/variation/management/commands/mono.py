"""
Django command checking total monotonicity of a real grid function and,
on request, writing its Jordan decomposition
"""
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from core.cli import (
    EXIT_FAILURE,
    command_error,
    format_cell,
    load_function_or_exit,
    read_input,
)
from core.conf import tolerance
from core.exceptions import VariationToolkitError
from core.reports import build_report, write_report
from core.serializers import save_grid_function
from variation.monotone import is_totally_monotone, jordan_decomposition
from variation.serializers import MonotonicityVerdictSerializer


class Command(BaseCommand):
    """Django command for the monotonicity verdict"""
    help = 'Check total monotonicity; --decompose writes nu and pi documents.'

    def add_arguments(self, parser):
        parser.add_argument('input', help='real grid-function document')
        parser.add_argument('--tolerance', type=float, default=None)
        parser.add_argument('--decompose', action='store_true')
        parser.add_argument('--nu-out', default=None)
        parser.add_argument('--pi-out', default=None)
        parser.add_argument('--json', dest='json_out', default=None)

    def handle(self, *args, **options):
        """Entry point for the command"""
        data = read_input(options['input'])
        function = load_function_or_exit(data)
        tol = tolerance(options['tolerance'])
        try:
            verdict = is_totally_monotone(function, tol)
        except VariationToolkitError as exc:
            raise command_error(exc) from exc

        if verdict:
            self.stdout.write('totally monotone: true')
        else:
            self.stdout.write(
                f'totally monotone: false '
                f'(alpha={verdict.alpha.bits}, '
                f'cell {format_cell(verdict.cell)})')

        results = {'verdict': MonotonicityVerdictSerializer(verdict).data}
        if options['decompose']:
            results['decomposition'] = self._decompose(function, tol, options)

        if options['json_out']:
            write_report(
                build_report('mono', [data], results, tol), options['json_out'])

    def _decompose(self, function, tol, options):
        """Write nu and pi, then recheck both parts and nu - pi = g"""
        parts = jordan_decomposition(function)
        stem = Path(options['input'])
        nu_path = options['nu_out'] or str(stem.with_suffix('.nu.json'))
        pi_path = options['pi_out'] or str(stem.with_suffix('.pi.json'))
        Path(nu_path).write_bytes(save_grid_function(parts.nu))
        Path(pi_path).write_bytes(save_grid_function(parts.pi))

        nu_ok = bool(is_totally_monotone(parts.nu, tol))
        pi_ok = bool(is_totally_monotone(parts.pi, tol))
        residual = float(abs(parts.recombined() - function.as_array()).max())
        passed = nu_ok and pi_ok and residual <= tol
        message = (f'decomposition recheck: nu monotone={nu_ok}, '
                   f'pi monotone={pi_ok}, max |nu - pi - g|={residual!r}')
        if not passed:
            raise CommandError(message, returncode=EXIT_FAILURE)
        self.stdout.write(self.style.SUCCESS(message))
        return {
            'nu': nu_path,
            'pi': pi_path,
            'nu_monotone': nu_ok,
            'pi_monotone': pi_ok,
            'residual': residual,
        }
