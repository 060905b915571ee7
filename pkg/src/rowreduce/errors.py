"""Exception hierarchy shared by the kernel and the command-line front end.

Usage errors mean the caller broke a precondition (bad index, mismatched
dimensions, wrong field). Domain errors mean the inputs were well formed but
the mathematical object asked for does not exist (a singular matrix has no
inverse). The CLI maps the first family to exit status 2 and the second to 1.
"""


class LinAlgError(Exception):
    """Base class for every error raised by this package."""


class UsageError(LinAlgError, ValueError):
    pass


class FieldMismatch(UsageError):
    pass


class ParseError(UsageError):
    """Malformed text input. ``line`` and ``col`` are 1-based when known."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            where = f"line {line}" + (f", column {col}" if col is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)


class DomainError(LinAlgError, ArithmeticError):
    pass


class DivisionByZero(DomainError, ZeroDivisionError):
    pass


class NotInvertible(DomainError):
    """Raised for a singular square matrix; ``rank`` is its row rank."""

    def __init__(self, rank, n):
        self.rank = rank
        self.n = n
        super().__init__(f"matrix is not invertible (row rank {rank} < {n})")


class SolveError(DomainError):
    """A solver was asked for something the system does not have.

    ``reason`` is ``"unsolvable"`` or ``"not-unique"``.
    """

    def __init__(self, reason, message):
        self.reason = reason
        super().__init__(message)
