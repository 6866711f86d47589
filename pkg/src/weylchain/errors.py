"""Exception types shared across the package."""

from __future__ import annotations


class ModulusError(ValueError):
    """Raised when a modulus is not a prime."""


class ContainmentError(ValueError):
    """Raised when a lattice or subspace is not contained where it must be."""


class DivisibilityError(ArithmeticError):
    """An integral divided power failed to divide exactly.

    This never happens for correct operator tables; it signals a transcription bug.
    """


class PreconditionError(ValueError):
    """Raised when an operation's input violates a documented precondition."""


class ScaleError(RuntimeError):
    """A resource cap was exceeded. Never silently truncated."""
