"""
Exception types raised across the package.

Library code raises these and never exits; apollonian.main turns them into
process exit codes.
"""
from typing import Optional


class ApollonianError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgument(ApollonianError, ValueError):
    """An argument is outside the domain an operation accepts."""


class DomainError(ApollonianError, ValueError):
    """A numeric argument lies outside the effective domain of a function."""


class AbsentSymbol(ApollonianError, LookupError):
    """A cut or postfix was requested for a symbol the code does not contain."""

    def __init__(self, code, symbol: int):
        self.code = code
        self.symbol = symbol
        super().__init__(f"symbol {symbol} does not occur in code {str(code)!r}")


class SizeGuardExceeded(ApollonianError):
    """An exact all-pairs computation was refused because the graph is too large."""

    def __init__(self, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(
            f"graph has {size} vertices; exact all-pairs BFS is limited to {limit}"
        )


class SolverError(ApollonianError, RuntimeError):
    """A numerical solver failed to converge or to verify its optimality conditions."""


class InvariantViolation(ApollonianError, AssertionError):
    """A structural invariant of a grown graph does not hold."""


class ExportError(ApollonianError, OSError):
    """Reading or writing a graph/experiment file failed."""

    def __init__(self, path, reason: Optional[str] = None):
        self.path = path
        message = f"cannot access {path}"
        if reason:
            message += f": {reason}"
        super().__init__(message)
