"""Error taxonomy shared across the package.

Every error raised on purpose derives from So5Error so the CLI can map
failures to exit codes in one place.
"""

from __future__ import annotations


class So5Error(Exception):
    """Base class for all package errors."""


class NegativeRadicand(So5Error):
    """Square root of a negative rational was requested."""


class MalformedKey(So5Error):
    """A label, key, or argument violates its structural invariants."""


class ChannelAbsent(So5Error):
    """The requested coupling channel does not occur for this source irrep."""


class FormulaDomainError(So5Error):
    """A closed-form entry was evaluated at a point where it is singular."""


class DimensionCap(So5Error):
    """A numeric construction would exceed the configured dimension limit."""


class DegenerateBasis(So5Error):
    """Numeric basis construction produced (near-)linearly dependent vectors."""


class EigenFailure(So5Error):
    """Numeric eigen-decomposition did not reach the required residual."""
