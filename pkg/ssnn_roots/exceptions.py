"""
Errors raised by ssnn_roots.

Input problems subclass the REST framework ValidationError so the record
serializers report them as field errors. Everything that goes wrong during
a computation derives from SsnnRootsError.
"""
from rest_framework.exceptions import ValidationError


class InvalidDelta(ValidationError):
    """The entries do not form a usable delta-vector."""
    default_code = 'invalid_delta'


class NegativeEntry(InvalidDelta):
    """A delta-vector entry is negative."""
    default_code = 'negative_entry'


class AllZero(InvalidDelta):
    """Every delta-vector entry is zero."""
    default_code = 'all_zero'


class NotSymmetric(InvalidDelta):
    """The operation needs delta_i == delta_{d-i}."""
    default_code = 'not_symmetric'


class ParseError(ValidationError):
    """An input record could not be read."""
    default_code = 'parse_error'

    def __init__(self, detail=None, code=None, line=None):
        super().__init__(detail=detail, code=code)
        self.line = line


class SsnnRootsError(Exception):
    """Base class for computational failures."""


class InvalidConfiguration(SsnnRootsError):
    """Solver configuration outside its valid range."""


class IndexOutOfRange(SsnnRootsError):
    """Symmetric basis index outside 0..floor(d/2)."""


class ParityViolation(SsnnRootsError):
    """A polynomial expected to be even or odd has terms of both parities."""


class DegenerateInput(SsnnRootsError):
    """Constant polynomials have no roots to find."""


class NoConvergence(SsnnRootsError):
    """
    The iteration hit max_iterations. `partial` holds the RootSet reached so far.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class AmbiguousClassification(SsnnRootsError):
    """A Sturm interval could not separate a root candidate."""


class EndpointIsRoot(SsnnRootsError):
    """A bracketing endpoint kept landing on a root after every nudge."""


class Inconclusive(SsnnRootsError):
    """A root's error disk straddles a bound even at the highest precision."""

    def __init__(self, message, roots=()):
        super().__init__(message)
        self.roots = tuple(roots)


class UnsupportedDimension(SsnnRootsError):
    """No data or formula for this degree."""


class ParameterBelowThreshold(SsnnRootsError):
    """The realization parameter would give a complex pair."""


class TargetOutOfRange(SsnnRootsError):
    """The requested real root is outside the realizable interval."""
