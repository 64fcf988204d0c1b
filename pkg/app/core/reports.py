"""
JSON reports written by the management commands.

A report is deterministic for identical inputs, flags, seed and tolerance:
it carries no timestamps, and keys keep a fixed order.
"""
import hashlib

from rest_framework import serializers

from core.conf import vhk_setting
from core.serializers import render_document


class ReportSerializer(serializers.Serializer):
    """Envelope shared by every command report"""
    command = serializers.CharField()
    input_digest = serializers.CharField()
    tolerance = serializers.FloatField()
    seed = serializers.IntegerField(allow_null=True, required=False)
    version = serializers.CharField()
    results = serializers.DictField()


def digest(*chunks):
    sha = hashlib.sha256()
    for chunk in chunks:
        sha.update(chunk)
    return sha.hexdigest()


def build_report(command, input_bytes, results, tol, seed=None):
    report = {
        'command': command,
        'input_digest': digest(*input_bytes),
        'tolerance': tol,
        'seed': seed,
        'version': vhk_setting('VERSION'),
        'results': results,
    }
    ReportSerializer(data=report).is_valid(raise_exception=True)
    return report


def render_report(report):
    return render_document(report)


def write_report(report, out_path=None, stdout=None):
    """Write to ``out_path`` when given, otherwise to the command stdout"""
    rendered = render_report(report)
    if out_path:
        with open(out_path, 'wb') as handle:
            handle.write(rendered)
    elif stdout is not None:
        stdout.write(rendered.decode('utf-8'))
    return rendered
