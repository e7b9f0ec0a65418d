"""Exception hierarchy shared by every module."""

from __future__ import annotations


class LojaxError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(LojaxError, ValueError):
    """Malformed or out-of-domain input (maps to CLI exit code 1)."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class NotFiniteColength(InvalidInput):
    """The ideal's Newton polyhedron does not meet every coordinate axis."""


class NotApplicable(LojaxError):
    """A requested exact quantity is not available for this input (exit code 2)."""


class LimitExceeded(LojaxError):
    """A resource cap was hit: dimension cap or sigma stabilization cap (exit code 3)."""


class DimensionLimit(LimitExceeded):
    pass


class NotStabilized(LimitExceeded):
    """Rees mixed multiplicity did not stabilize before the cap; it is possibly infinite."""


class EmptyRegion(LojaxError):
    """Linear minimization over an infeasible region."""


class InternalError(LojaxError, AssertionError):
    """An invariant that the mathematics guarantees was violated; always a bug."""
