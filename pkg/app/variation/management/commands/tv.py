"""
Django command computing the total variation of a grid-function document
"""
from django.core.management.base import BaseCommand

from core.cli import command_error, load_function_or_exit, read_input
from core.conf import tolerance
from core.exceptions import VariationToolkitError
from core.reports import build_report, write_report
from variation.engine import total_variation
from variation.serializers import VariationReportSerializer


class Command(BaseCommand):
    """Django command for TV(f) with the per-alpha table"""
    help = 'Compute the Vitali-Hardy-Krause total variation of a grid function.'

    def add_arguments(self, parser):
        parser.add_argument('input', help='grid-function document (JSON)')
        parser.add_argument('--tolerance', type=float, default=None)
        parser.add_argument(
            '--json', dest='json_out', default=None,
            help='write the report here instead of stdout')

    def handle(self, *args, **options):
        """Entry point for the command"""
        data = read_input(options['input'])
        function = load_function_or_exit(data)
        tol = tolerance(options['tolerance'])
        try:
            report = total_variation(function, tol)
        except VariationToolkitError as exc:
            raise command_error(exc) from exc

        results = VariationReportSerializer(report).data
        envelope = build_report('tv', [data], results, tol)
        if options['json_out']:
            write_report(envelope, options['json_out'])
            self.stdout.write(self.style.SUCCESS(f'TV = {report.tv!r}'))
        else:
            write_report(envelope, stdout=self.stdout)
