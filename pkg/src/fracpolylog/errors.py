"""Error taxonomy shared by every module in the package."""

from __future__ import annotations


class FracpolylogError(Exception):
    """Base class for all library errors."""


class DomainError(FracpolylogError):
    """Input outside an operation's mathematical domain.

    Carries ``pole`` when the violation is proximity to a specific pole
    (e.g. gamma at a non-positive integer).
    """

    def __init__(self, message: str, pole: int | None = None):
        super().__init__(message)
        self.pole = pole


class ConvergenceError(FracpolylogError):
    """An iterative scheme failed to reach the requested accuracy.

    ``achieved`` reports the best error bound obtained before giving up.
    """

    def __init__(self, message: str, achieved: float | None = None):
        super().__init__(message)
        self.achieved = achieved


class UnsupportedError(FracpolylogError):
    """The request is well posed but outside the implemented scope."""
