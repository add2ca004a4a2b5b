"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: ``InputError`` and ``DomainError`` exit 1,
``CapabilityError`` exits 2.
"""

from __future__ import annotations


class AnosovError(Exception):
    """Base class for all errors raised by this package."""


class InputError(AnosovError, ValueError):
    """An argument violates an operation's precondition."""


class DomainError(InputError):
    """The input lies outside the domain a construction is defined on."""


class ParseError(InputError):
    """Malformed serialized input. ``offset`` is the failing byte index."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


class CapabilityError(AnosovError):
    """The request exceeds a configured scale limit."""
