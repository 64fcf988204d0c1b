"""
Domain errors for the variation toolkit.

Every error is a ``ValueError`` carrying a short machine ``code`` so
management commands can map it to an exit status.
"""


class VariationToolkitError(ValueError):
    """Base class for toolkit errors"""
    code = 'invalid'

    def __init__(self, message, **context):
        super().__init__(message)
        self.context = context


class DimensionCapError(VariationToolkitError):
    code = 'dimension_cap'


class EmptyTruncationError(VariationToolkitError):
    code = 'empty_truncation'


class EmptyIntervalError(VariationToolkitError):
    code = 'empty_interval'


class ValueSpaceMismatchError(VariationToolkitError):
    code = 'space_mismatch'


class EmptySemigroupSumError(VariationToolkitError):
    code = 'empty_sum'


class UnsupportedSpaceError(VariationToolkitError):
    """An operation the value space cannot provide"""
    code = 'unsupported_space'


class NoCompactnessSupportError(UnsupportedSpaceError):
    code = 'no_compactness_support'


class NonRealSpaceError(UnsupportedSpaceError):
    code = 'non_real_space'


class UnboundedSequenceError(VariationToolkitError):
    """Boundedness surrogate for pointwise precompactness failed"""
    code = 'unbounded'


class DegenerateRectangleError(VariationToolkitError):
    code = 'degenerate_rectangle'


class PartitionMismatchError(VariationToolkitError):
    code = 'partition_mismatch'


class IndexRangeError(VariationToolkitError):
    code = 'index_range'


class OrderError(VariationToolkitError):
    """Node indices are not ordered x <= y"""
    code = 'order'


class PartitionCapError(VariationToolkitError):
    code = 'partition_cap'


class ExpressionError(VariationToolkitError):
    code = 'expression'


class DegenerateDualsError(VariationToolkitError):
    code = 'degenerate_duals'


class ConvergenceError(VariationToolkitError):
    code = 'not_convergent'


class SelectionCertificateError(VariationToolkitError):
    code = 'certificate'
