"""Exception types raised by blockpivot operations."""

from __future__ import annotations


class BlockpivotError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(BlockpivotError, ValueError):
    """Malformed input: wrong shape, bad partition, or non-finite entries."""


class PreconditionError(BlockpivotError, ValueError):
    """A mathematical hypothesis of the requested operation does not hold.

    ``certificate`` carries the numeric evidence (a residual norm or a
    short description of the failed condition) so callers can report it.
    """

    def __init__(self, message: str, certificate: float | str | None = None):
        super().__init__(message)
        self.certificate = certificate


class InclusionError(PreconditionError):
    """A required kernel or range inclusion fails.

    ``which`` names the failed inclusion and ``certificate`` is the norm of
    the residual that witnesses the failure.
    """

    def __init__(self, message: str, which: str, certificate: float | None = None):
        super().__init__(message, certificate)
        self.which = which


class NoSolutionError(BlockpivotError):
    """The requested linear system has no solution.

    ``certificate`` is the norm of the component of the right-hand side
    outside the attainable range.
    """

    def __init__(self, message: str, certificate: float | None = None):
        super().__init__(message)
        self.certificate = certificate
