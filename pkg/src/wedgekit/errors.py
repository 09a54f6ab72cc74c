"""Exception hierarchy shared by the library and the CLI."""


class WedgeKitError(Exception):
    """Base class for every error raised by wedgekit."""


class DomainError(WedgeKitError, ValueError):
    """An argument lies outside the domain of the operation."""


class CapacityError(WedgeKitError):
    """A count or allocation exceeds the configured limit."""


class SingularMatrixError(WedgeKitError, ArithmeticError):
    """The coefficient matrix of a linear system is singular.

    ``det`` holds the determinant that was observed (exactly zero in exact
    mode, or the float estimate when the pivot test tripped).
    """

    def __init__(self, message, det=None):
        super().__init__(message)
        self.det = det


class ParseError(WedgeKitError, ValueError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class InvariantError(WedgeKitError, AssertionError):
    """An identity that must hold by construction was violated (a bug)."""
