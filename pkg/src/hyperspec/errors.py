"""Exception hierarchy shared by the library and the command-line front end."""

from __future__ import annotations


class HyperspecError(Exception):
    """Base class for all library errors."""


class InputError(HyperspecError, ValueError):
    """Invalid argument, malformed file, or violated precondition."""


class CapacityError(HyperspecError):
    """An exhaustive routine was asked to handle more vertices than its cap."""


class ConvergenceError(HyperspecError):
    """An iterative solver stopped before reaching its tolerance.

    ``bracket`` holds the last ``(low, high)`` eigenvalue bounds when the
    solver maintains them, otherwise ``None``.
    """

    def __init__(self, message: str, bracket: tuple[float, float] | None = None):
        super().__init__(message)
        self.bracket = bracket


class VerificationError(HyperspecError):
    """A numerical verification found eigenpairs that fail their residual test."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report
