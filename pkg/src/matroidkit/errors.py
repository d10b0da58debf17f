"""Exception taxonomy shared across the library."""

from __future__ import annotations


class MatroidError(Exception):
    """Base class for all library errors."""


class InputError(MatroidError):
    """Arguments violate a documented precondition."""


class CapacityError(MatroidError):
    """An exhaustive helper was asked to exceed its size cap."""


class ConsistencyError(MatroidError):
    """Supplied data (a chain, a certificate) failed re-verification."""


class NoFundamentalCircuit(MatroidError):
    """There is no fundamental circuit because the extension is independent."""


class InternalInvariantError(MatroidError):
    """A structural invariant that should hold by construction failed.

    Signals a bug upstream, never bad user input.  Diagnostic payloads (for
    example an exchange chain witnessing non-maximality of a base pair) ride
    on ``payload``.
    """

    def __init__(self, message: str, payload=None):
        super().__init__(message)
        self.payload = payload
