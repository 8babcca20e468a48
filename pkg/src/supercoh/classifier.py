"""Closed-form answers for low-degree cohomology.

For Kac and irreducible coefficients the first and second cohomology
groups are at most one-dimensional, and nonvanishing happens only when
the highest weight sits in a short explicit list of special weights.
This module is that lookup table: every answer is decided by exact
coordinate comparison against weights built in :mod:`supercoh.weights`,
no linear algebra involved.  The heavy machinery in
:mod:`supercoh.oracle` exists to *check* these tables, not to produce
them.

Answers carry an optional ``witness_kind`` naming a concrete cocycle
that spans the cohomology group; those names are accepted by
``supercoh.oracle.build_named_cocycle``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import DomainError
from .weights import (
    FAMILY_OSPC,
    FAMILY_SL,
    AlgebraSpec,
    Weight,
    alpha_max,
    alpha_min,
    special_weight,
)

__all__ = [
    "COEFFICIENT_KINDS",
    "WITNESS_KINDS",
    "CohomologyAnswer",
    "h1_kac",
    "h2_kac",
    "h1_irr",
    "h2_irr",
    "enumerate_h2_irr",
    "enveloping_answers",
]

COEFFICIENT_KINDS = ("kac", "irreducible", "enveloping")

#: Names understood by ``oracle.build_named_cocycle``, plus the
#: universal-coefficients witness which is a function of its own.
WITNESS_KINDS = (
    "phi_18",
    "phi_prime_125",
    "phi_21",
    "phi_22",
    "phi1_top",
    "phi1_bottom",
    "pbw_ad_witness",
)


@dataclass(frozen=True)
class CohomologyAnswer:
    """What a classification query returns.

    ``dimension`` is a nonnegative integer except for enveloping
    coefficients in degree one, where the group is infinite dimensional
    and we report the string ``"nonzero"`` instead of pretending to
    count.
    """

    degree: int
    coefficient_kind: str
    dimension: int | str
    witness_kind: str | None = None

    def __post_init__(self) -> None:
        if self.degree not in (1, 2):
            raise DomainError(f"degree must be 1 or 2, got {self.degree}")
        if self.coefficient_kind not in COEFFICIENT_KINDS:
            raise DomainError(f"unknown coefficient kind {self.coefficient_kind!r}")
        if self.witness_kind is not None and self.witness_kind not in WITNESS_KINDS:
            raise DomainError(f"unknown witness kind {self.witness_kind!r}")
        if self.coefficient_kind in ("kac", "irreducible"):
            if self.dimension not in (0, 1):
                raise DomainError(
                    "Kac and irreducible coefficients have dimension 0 or 1 "
                    f"in degrees 1 and 2; got {self.dimension!r}"
                )

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "coefficient_kind": self.coefficient_kind,
            "dimension": self.dimension,
            "witness_kind": self.witness_kind,
        }


def _check_weight(alg: AlgebraSpec, w: Weight, what: str) -> None:
    if w.alg != alg:
        raise DomainError(
            f"{what} lives in {w.alg}, but the query was posed for {alg}"
        )
    if not w.is_integral():
        raise DomainError(f"{what} {w} is not integral")
    if not w.is_dominant():
        raise DomainError(f"{what} {w} is not dominant")
    if alg.family == FAMILY_SL and alg.m == alg.n:
        warnings.warn(
            f"{alg} is the degenerate equal-rank case; the classification "
            "tables are stated for n < m and are applied verbatim",
            stacklevel=3,
        )


# ---------------------------------------------------------------------------
# Kac coefficients
# ---------------------------------------------------------------------------


def h1_kac(alg: AlgebraSpec, lam: Weight) -> CohomologyAnswer:
    """dim H^1 with coefficients in the Kac module of highest weight ``lam``.

    The answer is 1 exactly at ``2*rho1`` and ``2*rho1 + alpha_max`` —
    the same two weights for both families — and 0 everywhere else.
    """
    _check_weight(alg, lam, "highest weight")
    two_rho1 = special_weight(alg, "two_rho1")
    if lam == two_rho1:
        return CohomologyAnswer(1, "kac", 1, "phi_prime_125")
    if lam == two_rho1 + alpha_max(alg):
        return CohomologyAnswer(1, "kac", 1, "phi_18")
    return CohomologyAnswer(1, "kac", 0)


def h2_kac(alg: AlgebraSpec, lam: Weight) -> CohomologyAnswer:
    """dim H^2 with coefficients in the Kac module of highest weight ``lam``.

    For sl(m|n) the group is nonzero at ``2*rho1 + 2*alpha_max``, at
    ``2*rho1 + eta1`` when n >= 2, and at ``2*rho1 + alpha_max``; for
    osp(2|2n-2) at ``2*rho1 + alpha_max`` and ``2*rho1 + 2*alpha_max``.
    Note ``2*rho1 + alpha_max`` supports nonzero cohomology in degrees
    one *and* two.
    """
    _check_weight(alg, lam, "highest weight")
    two_rho1 = special_weight(alg, "two_rho1")
    amax = alpha_max(alg)
    if alg.family == FAMILY_SL:
        if lam == two_rho1 + 2 * amax:
            return CohomologyAnswer(2, "kac", 1, "phi_21")
        if alg.n >= 2 and lam == two_rho1 + special_weight(alg, "eta1"):
            return CohomologyAnswer(2, "kac", 1, "phi_21")
        if lam == two_rho1 + amax:
            return CohomologyAnswer(2, "kac", 1, "phi_22")
        return CohomologyAnswer(2, "kac", 0)
    if lam in (two_rho1 + amax, two_rho1 + 2 * amax):
        return CohomologyAnswer(2, "kac", 1)
    return CohomologyAnswer(2, "kac", 0)


# ---------------------------------------------------------------------------
# irreducible coefficients
# ---------------------------------------------------------------------------


def h1_irr(alg: AlgebraSpec, mu: Weight) -> CohomologyAnswer:
    """dim H^1 with coefficients in the irreducible module L_mu.

    Nonzero exactly at ``-alpha_min`` and the weights ``mu_j`` for
    0 <= j <= n-1 in the sl family; at ``-alpha_min`` and ``2*rho1``
    for osp(2|2n-2).  (When n = 1 the two descriptions meet:
    ``mu_0 = 2*rho1``.)
    """
    _check_weight(alg, mu, "highest weight")
    if mu == -alpha_min(alg):
        return CohomologyAnswer(1, "irreducible", 1, "phi1_bottom")
    if alg.family == FAMILY_SL:
        for j in range(alg.n):
            if mu == special_weight(alg, "mu_j", j=j):
                witness = "phi1_top" if j == alg.n - 1 else None
                return CohomologyAnswer(1, "irreducible", 1, witness)
        return CohomologyAnswer(1, "irreducible", 0)
    if mu == special_weight(alg, "two_rho1"):
        return CohomologyAnswer(1, "irreducible", 1, "phi1_top")
    return CohomologyAnswer(1, "irreducible", 0)


def _h2_irr_weights(alg: AlgebraSpec) -> list[Weight]:
    """The full nonvanishing list for degree two, in a fixed order.

    May contain coincidences in tiny ranks; callers that need distinct
    members should deduplicate (``enumerate_h2_irr`` does).
    """
    if alg.family == FAMILY_OSPC:
        return [
            special_weight(alg, "two_rho1") + alpha_max(alg),
            special_weight(alg, "minus_2amin"),
        ]
    n = alg.n
    amin = alpha_min(alg)
    out: list[Weight] = []
    for l in range(n):
        out.append(special_weight(alg, "mu_j_plus", j=l))
    for j in range(1, n):
        out.append(special_weight(alg, "mu_j_minus", j=j))
    # two-row staircase additions: mu_l + mu_{2,j} with 0 <= j <= l-2
    for l in range(2, n):
        base = special_weight(alg, "mu_j", j=l)
        for j in range(l - 1):
            out.append(base + special_weight(alg, "mu_ij", i=2, j=j))
    for j in range(1, n):
        out.append(special_weight(alg, "mu_j", j=j - 1) - amin)
    out.append(special_weight(alg, "minus_2amin"))
    if n >= 2:
        out.append(special_weight(alg, "eta2"))
    return out


def h2_irr(alg: AlgebraSpec, mu: Weight) -> CohomologyAnswer:
    """dim H^2 with coefficients in the irreducible module L_mu."""
    _check_weight(alg, mu, "highest weight")
    if mu in _h2_irr_weights(alg):
        return CohomologyAnswer(2, "irreducible", 1)
    return CohomologyAnswer(2, "irreducible", 0)


def enumerate_h2_irr(alg: AlgebraSpec) -> tuple[Weight, ...]:
    """All highest weights with nonzero H^2(L_mu), deduplicated.

    For sl(m|n) the count is pinned to (n+1)(n+2)/2, less one when
    n = 1; a mismatch would mean the list-building code is wrong, so it
    is asserted here rather than left to callers.
    """
    seen: set[Weight] = set()
    ordered: list[Weight] = []
    for w in _h2_irr_weights(alg):
        if w not in seen:
            seen.add(w)
            ordered.append(w)
    for w in ordered:
        assert w.is_integral() and w.is_dominant(), f"malformed member {w}"
    if alg.family == FAMILY_SL:
        n = alg.n
        expected = (n + 1) * (n + 2) // 2 - (1 if n == 1 else 0)
        assert len(ordered) == expected, (
            f"expected {expected} distinct weights for {alg}, got {len(ordered)}"
        )
    return tuple(ordered)


# ---------------------------------------------------------------------------
# enveloping coefficients
# ---------------------------------------------------------------------------


def enveloping_answers(alg: AlgebraSpec) -> tuple[CohomologyAnswer, CohomologyAnswer]:
    """(H^1, H^2) with coefficients in the adjoint enveloping algebra.

    Degree one is nonzero (infinite dimensional, hence the string
    marker) with an explicit invariant produced by
    ``oracle.pbw_ad_witness``; degree two vanishes.  Same answer for
    both families.
    """
    if alg.family not in (FAMILY_SL, FAMILY_OSPC):  # pragma: no cover
        raise DomainError(f"unknown family {alg.family!r}")
    return (
        CohomologyAnswer(1, "enveloping", "nonzero", "pbw_ad_witness"),
        CohomologyAnswer(2, "enveloping", 0),
    )
