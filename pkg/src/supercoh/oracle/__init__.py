"""Exact first-principles recomputation layer.

Everything in here rebuilds modules, differentials and cocycles directly from
the structure constants, with Fraction arithmetic throughout.  It exists to
check the closed-form classifiers against something that cannot share their
assumptions, so it deliberately avoids the atypicality combinatorics.
"""

from .modules import (
    SuperModule,
    build_g0_irreducible,
    build_irreducible,
    build_kac_module,
    default_dim_cap,
    multiplicity_of_g0_hw,
)
from .complex import (
    Cochain,
    CochainComplex,
    apply_d,
    cochain_complex,
    cohomology_dims,
    contraction_and_theta,
    invariant_reduction_agrees,
    make_cochain,
    random_cochain,
    verify_cocycle,
)
from .cocycles import COCYCLE_KINDS, build_named_cocycle
from .pbw import PbwElement, pbw_ad_witness

__all__ = [
    "SuperModule",
    "build_g0_irreducible",
    "build_kac_module",
    "build_irreducible",
    "default_dim_cap",
    "multiplicity_of_g0_hw",
    "Cochain",
    "CochainComplex",
    "apply_d",
    "cochain_complex",
    "cohomology_dims",
    "contraction_and_theta",
    "invariant_reduction_agrees",
    "make_cochain",
    "random_cochain",
    "verify_cocycle",
    "COCYCLE_KINDS",
    "build_named_cocycle",
    "PbwElement",
    "pbw_ad_witness",
]
