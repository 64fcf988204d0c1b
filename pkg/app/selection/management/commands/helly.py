"""
Django command running strong or weak Helly selection on a sequence spec
"""
from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from core.cli import EXIT_MALFORMED, command_error, read_input
from core.conf import tolerance
from core.exceptions import VariationToolkitError
from core.reports import build_report, write_report
from selection.helly import helly_select, weak_helly_select
from selection.serializers import (
    SelectionResultSerializer,
    load_duals,
    load_sequence_spec,
)


class Command(BaseCommand):
    """Django command for helly_select and weak_helly_select"""
    help = 'Extract a pointwise convergent subsequence from a sequence spec.'

    def add_arguments(self, parser):
        parser.add_argument('spec', help='sequence-spec document (JSON)')
        parser.add_argument('--epsilon', type=float, default=1e-3)
        parser.add_argument(
            '--probe', type=int, default=None,
            help='override the probe window of the sequence document')
        parser.add_argument(
            '--weak', dest='duals', default=None,
            help='duals document; selects through these functionals')
        parser.add_argument('--tolerance', type=float, default=None)
        parser.add_argument(
            '--json', dest='json_out', default=None,
            help='write the report here instead of stdout')

    def handle(self, *args, **options):
        """Entry point for the command"""
        if options['epsilon'] <= 0:
            raise CommandError(
                'epsilon must be positive', returncode=EXIT_MALFORMED)
        if options['probe'] is not None and options['probe'] < 1:
            raise CommandError(
                'probe must be at least 1', returncode=EXIT_MALFORMED)
        data = read_input(options['spec'])
        inputs = [data]
        tol = tolerance(options['tolerance'])
        try:
            sequence, probe = load_sequence_spec(data)
            probe = options['probe'] or probe
            if options['duals']:
                duals_data = read_input(options['duals'])
                inputs.append(duals_data)
                result = weak_helly_select(
                    sequence, load_duals(duals_data),
                    options['epsilon'], probe, tol)
            else:
                result = helly_select(
                    sequence, options['epsilon'], probe, tol)
        except (serializers.ValidationError, VariationToolkitError) as exc:
            raise command_error(exc) from exc

        results = SelectionResultSerializer(result).data
        envelope = build_report('helly', inputs, results, tol)
        if options['json_out']:
            write_report(envelope, options['json_out'])
            self.stdout.write(self.style.SUCCESS(
                f'selected {len(result.indices)} of {probe} terms; '
                f'sup TV = {result.sup_tv!r}, '
                f'limit TV = {result.limit_tv!r}, '
                f'max residual = {result.max_residual!r}'))
        else:
            write_report(envelope, stdout=self.stdout)
