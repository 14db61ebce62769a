"""Exception hierarchy shared by every module of the package."""


class SchubertRealError(Exception):
    """Base class for all errors raised by :mod:`schubert_real`."""


class ValidationError(SchubertRealError, ValueError):
    """An argument is outside the domain of an operation."""


class DegenerateSpanError(ValidationError):
    """Two points that should span a line coincide projectively."""


class NotAPointError(SchubertRealError):
    """An intersection expected to be a single point is empty or larger."""


class PreconditionError(ValidationError):
    """A geometric precondition (e.g. proper meeting) does not hold."""


class InvariantViolation(SchubertRealError):
    """Two independent computations of the same quantity disagree."""


class NonGenericError(SchubertRealError):
    """A configuration is in special position; the caller should resample.

    ``selection`` names the offending subproblem when there is one.
    """

    def __init__(self, message, selection=None):
        super().__init__(message)
        self.selection = selection


class RetryBudgetExhausted(SchubertRealError):
    """Every seed in the retry schedule produced a non-generic instance."""

    def __init__(self, message, last_error=None):
        super().__init__(message)
        self.last_error = last_error


class ParseError(SchubertRealError, ValueError):
    """Malformed serialized data. ``path`` locates the offending field."""

    def __init__(self, message, path="$"):
        super().__init__(f"{path}: {message}")
        self.path = path
