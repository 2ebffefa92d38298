"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: parse problems are 2, violated
preconditions are 3, failed internal cross-assertions are 4.
"""


class LaceError(Exception):
    """Base class for all library errors."""

    exit_code = 3


class ParseError(LaceError, ValueError):
    exit_code = 2


class DegreeExceedsBound(LaceError, ValueError):
    pass


class BadSectionIndex(LaceError, ValueError):
    pass


class NotSymmetric(LaceError, ValueError):
    pass


class OutOfRange(LaceError, ValueError):
    pass


class EndpointIsRoot(LaceError, ValueError):
    pass


class NotRealRooted(LaceError, ValueError):
    pass


class InconsistentFTriangle(LaceError, ValueError):
    pass


class CountingBoundExceeded(LaceError, ValueError):
    pass


class PathMismatch(LaceError, AssertionError):
    """Two independent derivations of the same object disagree."""

    exit_code = 4


class UniformityViolation(PathMismatch):
    pass
