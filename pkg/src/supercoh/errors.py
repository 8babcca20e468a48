"""Exception types shared across the package.

The CLI maps these onto process exit codes, so library code should raise
the most specific one that applies rather than bare ValueError.
"""

from __future__ import annotations


class SupercohError(Exception):
    """Base class for package errors."""


class ParseError(SupercohError):
    """Malformed textual input (weight strings, Dynkin labels, CLI grammar)."""


class DomainError(SupercohError):
    """Structurally valid input outside the mathematical domain.

    Examples: a non-dominant highest weight where a module must be built, a
    family/rank combination that does not exist, an index outside its window.
    """


class RangeError(DomainError):
    """An index parameter outside the window where a family is defined."""


class ResourceError(SupercohError):
    """A computation was refused or aborted because it exceeds a size cap."""


class FixtureError(SupercohError):
    """A stored weight-graph fixture failed an integrity check."""
