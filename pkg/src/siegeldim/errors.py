"""Exception hierarchy shared by every module of the package."""


class SiegelDimError(Exception):
    """Base class for all errors raised by siegeldim."""


class PoleOrZero(SiegelDimError, ArithmeticError):
    """A factor of a telescoped Gamma quotient vanished."""


class InvalidRank(SiegelDimError, ValueError):
    pass


class TooManyRows(SiegelDimError, ValueError):
    pass


class SingularElimination(SiegelDimError, ArithmeticError):
    """Triangular elimination met a zero pivot. Indicates a bug."""


class OutOfRange(SiegelDimError, ValueError):
    pass


class OutOfProvenRange(SiegelDimError, ValueError):
    """Parameters lie outside ``k_n > n + 1`` and ``N > 2``.

    Pass ``force=True`` to evaluate the formula anyway; the resulting
    report is then flagged as unproven.
    """


class NonIntegerResult(SiegelDimError, ArithmeticError):
    """A dimension evaluated in the proven range was not an integer."""
