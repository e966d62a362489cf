"""Exception hierarchy shared by every module."""


class SkeinError(Exception):
    """Base class for errors raised by skeinfrob."""


class LevelMismatchError(SkeinError, ValueError):
    """Operands live at different levels or on different surfaces."""


class DomainError(SkeinError, ValueError):
    """An argument is outside the domain of an operation."""


class SingularMatrixError(SkeinError, ArithmeticError):
    """A linear system has no unique solution over the fraction field."""


class InternalArithmeticError(SkeinError, ArithmeticError):
    """A result contradicts a proven property; signals a bug, not bad input."""


class IdentityVerificationError(SkeinError, AssertionError):
    """A rewriting identity failed its machine check before use."""


class NotComputableError(SkeinError):
    """The requested quantity is not determined by the implemented theory."""


class ParseError(SkeinError, ValueError):
    def __init__(self, message, text="", column=None):
        self.text = text
        self.column = column
        where = f" at column {column}" if column is not None else ""
        super().__init__(f"syntax error{where}: {message}")
