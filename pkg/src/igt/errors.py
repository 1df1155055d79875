"""Exception types shared across the package.

Exit-code mapping used by the CLI: :class:`InputError` (and subclasses)
means the caller supplied something invalid (exit 2);
:class:`ResourceLimitError` means an exact computation would exceed the
configured enumeration budget (exit 3).
"""

from __future__ import annotations


class InputError(ValueError):
    """Invalid argument, unknown identifier, or violated precondition."""


class DocumentError(InputError):
    """A game document failed schema or invariant validation."""


class ResourceLimitError(RuntimeError):
    """An exhaustive computation was refused because it exceeds a cap."""


class SelfCheckError(RuntimeError):
    """A constructed object failed its own correctness validation."""
