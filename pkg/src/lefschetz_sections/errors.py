"""Exception hierarchy.

Everything raised on purpose derives from :class:`LefschetzError`, so callers
(the CLI in particular) can tell domain failures apart from bugs.
"""


class LefschetzError(Exception):
    """Base class for all library errors."""


class InvalidParameter(LefschetzError, ValueError):
    pass


class ContextMismatch(LefschetzError, TypeError):
    """Two scalars (or a scalar and a matrix) live in different fields."""


class DivisionByZero(LefschetzError, ZeroDivisionError):
    pass


class IndexOutOfRange(LefschetzError, IndexError):
    pass


class NotSquare(LefschetzError, ValueError):
    pass


class NonArtinianSection(LefschetzError, ValueError):
    """The hyperplane ``w + a*x`` is a zero-divisor on the lifted ideal."""


class NotTrueLifting(LefschetzError, ValueError):
    """The chosen lifting constants collide in this characteristic."""


class NotArtinianInRange(LefschetzError, ValueError):
    """The Hilbert function did not vanish before the degree bound."""
