"""Exception hierarchy shared by every module."""


class TdpError(Exception):
    """Base class for all errors raised by tdpoly."""


class ParameterError(TdpError, ValueError):
    """A graph family or operation received parameters outside its domain."""


class NotFoundError(TdpError, KeyError):
    """A vertex or edge that was referenced does not exist."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class Graph6Error(TdpError, ValueError):
    """Malformed graph6 input.  ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class SizeLimitError(TdpError):
    """Input too large for the requested exhaustive method."""


class UndefinedError(TdpError, ValueError):
    """Quantity undefined for this graph, e.g. total domination number with an isolated vertex."""


class NumericFailure(TdpError, ArithmeticError):
    """Numeric root finding did not converge."""


class PreconditionError(TdpError, ValueError):
    """An operation was called on input that violates its precondition."""


class ConsistencyError(TdpError, AssertionError):
    """Internal cross-check failed.  Always signals a bug."""


class TheoremViolation(TdpError, AssertionError):
    """A proved statement failed on a concrete graph."""
