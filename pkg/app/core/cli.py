"""
Shared plumbing for the management commands.

Exit codes:
    0  success
    1  a verification or recheck failed
    2  malformed input, parse error or a cap exceeded
    3  the value space does not support the operation
    4  the boundedness surrogate rejected a sequence
"""
from django.core.management.base import CommandError
from rest_framework import serializers

from core.exceptions import (
    ConvergenceError,
    DimensionCapError,
    ExpressionError,
    PartitionCapError,
    SelectionCertificateError,
    UnboundedSequenceError,
    UnsupportedSpaceError,
    VariationToolkitError,
)
from core.serializers import document_error_code, load_grid_function

EXIT_FAILURE = 1
EXIT_MALFORMED = 2
EXIT_UNSUPPORTED = 3
EXIT_UNBOUNDED = 4


def read_input(path):
    try:
        with open(path, 'rb') as handle:
            return handle.read()
    except OSError as exc:
        raise CommandError(
            f'cannot read {path}: {exc.strerror}',
            returncode=EXIT_MALFORMED) from exc


def command_error(exc):
    """Translate a toolkit or validation error into a CommandError"""
    if isinstance(exc, serializers.ValidationError):
        return CommandError(
            f'malformed input ({document_error_code(exc)}): {exc.detail}',
            returncode=EXIT_MALFORMED)
    if isinstance(exc, UnsupportedSpaceError):
        return CommandError(str(exc), returncode=EXIT_UNSUPPORTED)
    if isinstance(exc, UnboundedSequenceError):
        return CommandError(str(exc), returncode=EXIT_UNBOUNDED)
    if isinstance(exc, (ExpressionError, DimensionCapError,
                        PartitionCapError)):
        return CommandError(str(exc), returncode=EXIT_MALFORMED)
    if isinstance(exc, (ConvergenceError, SelectionCertificateError)):
        return CommandError(str(exc), returncode=EXIT_FAILURE)
    if isinstance(exc, VariationToolkitError):
        return CommandError(
            f'{exc.code}: {exc}', returncode=EXIT_MALFORMED)
    return CommandError(str(exc), returncode=EXIT_FAILURE)


def load_function_or_exit(data):
    try:
        return load_grid_function(data)
    except (serializers.ValidationError, VariationToolkitError) as exc:
        raise command_error(exc) from exc


def format_cell(cell):
    if cell.dims == 1:
        return f'[{cell.lo[0]}..{cell.hi[0]}]'
    return f'[{cell.lo}..{cell.hi}]'
