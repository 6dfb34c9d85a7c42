"""Exception types shared across the package."""

from __future__ import annotations


class AntimagicError(Exception):
    """Base class for every error this package raises on purpose."""


class InvalidParameterError(AntimagicError, ValueError):
    """A structural parameter is malformed or out of range."""


class NotAPathError(AntimagicError):
    """The underlying undirected graph is not a path."""


class InvalidDistanceSetError(AntimagicError, ValueError):
    """A distance set is empty, negative, or exceeds the partial diameter."""


class TheoremPreconditionError(AntimagicError):
    """An operation was invoked outside the hypotheses it needs."""
