"""Exact cohomology toolkit for the basic classical families sl(m|n) and
osp(2|2n-2): atypicality combinatorics, closed-form classification of low
cohomology, and a small exact-arithmetic oracle that recomputes everything
from scratch on desk-sized instances."""

from .errors import (
    DomainError,
    FixtureError,
    ParseError,
    RangeError,
    ResourceError,
    SupercohError,
)
from .weights import FAMILY_OSPC, FAMILY_SL, AlgebraSpec, Weight

__all__ = [
    "AlgebraSpec",
    "Weight",
    "FAMILY_SL",
    "FAMILY_OSPC",
    "SupercohError",
    "ParseError",
    "DomainError",
    "RangeError",
    "ResourceError",
    "FixtureError",
]

__version__ = "0.1.0"
