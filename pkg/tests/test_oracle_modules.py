"""Explicit module construction: g_0 irreducibles, Kac modules, quotients."""

from __future__ import annotations

from fractions import Fraction as Q

import pytest

from supercoh.errors import DomainError, ResourceError
from supercoh.oracle import (
    build_g0_irreducible,
    build_irreducible,
    build_kac_module,
    default_dim_cap,
    multiplicity_of_g0_hw,
)
from supercoh.oracle.modules import DIM_CAP_ENV
from supercoh.atypicality import kappa_multiplicity
from supercoh.weights import AlgebraSpec, Weight, alpha_max, alpha_min, special_weight

SL21 = AlgebraSpec("sl", 2, 1)
SL32 = AlgebraSpec("sl", 3, 2)
O2 = AlgebraSpec("ospc", 2, 2)


def _sw(alg, kind, **kw):
    return special_weight(alg, kind, **kw)


# ---------------------------------------------------------------------------
# g_0 irreducibles
# ---------------------------------------------------------------------------


def test_g0_trivial_module():
    mod = build_g0_irreducible(SL21, Weight.zero(SL21))
    assert mod.dim == 1
    assert mod.check_representation()


def test_g0_dimensions_match_weyl():
    # gl(2) x gl(1): label a -> dimension a + 1
    assert build_g0_irreducible(SL21, Weight.parse(SL21, "1,0|-1")).dim == 2
    assert build_g0_irreducible(SL21, Weight.parse(SL21, "2,0|-2")).dim == 3
    # gl(3) x gl(2) adjoint-like labels
    assert build_g0_irreducible(SL32, Weight.parse(SL32, "1,0,-1|0,0")).dim == 8
    assert build_g0_irreducible(SL32, Weight.parse(SL32, "0,0,0|1,-1")).dim == 3


def test_g0_weights_are_bounded_by_highest():
    mod = build_g0_irreducible(SL32, Weight.parse(SL32, "1,0,-1|0,0"))
    lam = mod.weight(mod.hw_index)
    assert lam == Weight.parse(SL32, "1,0,-1|0,0")
    assert all(w.level() <= lam.level() for w in (mod.weight(i) for i in range(mod.dim)))


# ---------------------------------------------------------------------------
# Kac modules
# ---------------------------------------------------------------------------


def test_kac_dimension_law():
    # dim V_lam = 2^(mn) * dim L0(lam)
    assert build_kac_module(SL21, Weight.zero(SL21)).dim == 4
    assert build_kac_module(SL21, _sw(SL21, "two_rho1")).dim == 4
    assert build_kac_module(SL21, Weight.parse(SL21, "1,0|-1")).dim == 8
    assert build_kac_module(SL32, Weight.zero(SL32)).dim == 64
    assert build_kac_module(O2, Weight.zero(O2)).dim == 4
    assert build_kac_module(O2, _sw(O2, "two_rho1")).dim == 4


def test_kac_levels_descend_through_mn_steps():
    V = build_kac_module(SL21, _sw(SL21, "two_rho1"))
    assert sorted(V.levels, reverse=True) == [Q(2), Q(1), Q(1), Q(0)]
    top = max(V.levels)
    bottom = min(V.levels)
    assert top - bottom <= SL21.m * SL21.n


def test_kac_level_span_bound():
    for alg, lam in [
        (SL21, Weight.parse(SL21, "2,0|-2")),
        (SL32, _sw(SL32, "mu_j", j=1)),
        (O2, _sw(O2, "two_rho1") + alpha_max(O2)),
    ]:
        mod = build_kac_module(alg, lam)
        assert max(mod.levels) - min(mod.levels) <= alg.num_odd_positive
        assert mod.weight(mod.hw_index) == lam


def test_kac_representation_property():
    for alg, lam in [
        (SL21, _sw(SL21, "two_rho1")),
        (SL21, Weight.parse(SL21, "1,0|-1")),
        (SL32, Weight.zero(SL32)),
        (O2, _sw(O2, "two_rho1")),
    ]:
        assert build_kac_module(alg, lam).check_representation()


def test_kac_bottom_of_singly_atypical_module_is_invariant():
    # V_{2rho1} on sl(2|1) ends in a one-dimensional trivial submodule
    V = build_kac_module(SL21, _sw(SL21, "two_rho1"))
    (bottom,) = [i for i in range(V.dim) if V.levels[i] == 0]
    for col in V.actions.values():
        assert bottom not in col or not col[bottom]


def test_weight_spaces_partition_basis():
    V = build_kac_module(SL32, Weight.zero(SL32))
    spaces = V.weight_spaces()
    assert sum(len(v) for v in spaces.values()) == V.dim
    assert V.weight_space(Weight.zero(SL32))


# ---------------------------------------------------------------------------
# irreducible quotients
# ---------------------------------------------------------------------------


def test_typical_kac_module_is_already_irreducible():
    lam = Weight.parse(SL21, "1,0|-1")  # typical
    assert build_irreducible(SL21, lam).dim == build_kac_module(SL21, lam).dim


def test_atypical_quotients_shrink():
    assert build_irreducible(SL21, _sw(SL21, "two_rho1")).dim == 3
    assert build_irreducible(SL21, -alpha_min(SL21)).dim == 3
    assert build_irreducible(SL21, Weight.zero(SL21)).dim == 1
    assert build_irreducible(O2, Weight.zero(O2)).dim == 1


def test_irreducible_representation_property():
    for alg, lam in [
        (SL21, _sw(SL21, "two_rho1")),
        (SL21, -alpha_min(SL21)),
        (SL32, -alpha_min(SL32)),
        (O2, _sw(O2, "two_rho1")),
    ]:
        mod = build_irreducible(alg, lam)
        assert mod.check_representation()
        assert mod.weight(mod.hw_index) == lam


def test_irreducible_levels_pinned():
    L = build_irreducible(SL21, _sw(SL21, "two_rho1"))
    assert sorted(L.levels, reverse=True) == [Q(2), Q(1), Q(1)]


def test_module_kinds_are_recorded():
    assert build_kac_module(SL21, Weight.zero(SL21)).kind == "kac"
    assert build_irreducible(SL21, Weight.zero(SL21)).kind == "irreducible"


def test_non_dominant_highest_weight_is_rejected():
    with pytest.raises(DomainError):
        build_kac_module(SL21, Weight.parse(SL21, "0,1|-1"))
    with pytest.raises(DomainError):
        build_irreducible(SL32, Weight.parse(SL32, "0,0,0|-1,0"))


# ---------------------------------------------------------------------------
# multiplicity counter
# ---------------------------------------------------------------------------


def test_multiplicity_in_trivial_module():
    L = build_irreducible(SL21, Weight.zero(SL21))
    assert multiplicity_of_g0_hw(L, Weight.zero(SL21)) == 1
    assert multiplicity_of_g0_hw(L, alpha_max(SL21)) == 0


def test_multiplicity_of_two_amax_matches_box_count():
    # in a Kac module the count agrees with the diagram formula
    two_amax = _sw(SL32, "two_amax")
    for l in range(2):
        lam = _sw(SL32, "mu_j", j=l)
        V = build_kac_module(SL32, lam)
        assert multiplicity_of_g0_hw(V, two_amax) == kappa_multiplicity(lam)


def test_multiplicity_respects_simple_raising():
    # in V_{2rho1} over sl(2|1) the weight 2rho1 itself appears once
    V = build_kac_module(SL21, _sw(SL21, "two_rho1"))
    assert multiplicity_of_g0_hw(V, _sw(SL21, "two_rho1")) == 1


# ---------------------------------------------------------------------------
# dimension caps
# ---------------------------------------------------------------------------


def test_explicit_max_dim_trips():
    with pytest.raises(ResourceError, match="cap"):
        build_kac_module(SL32, Weight.zero(SL32), max_dim=10)


def test_env_cap_is_read(monkeypatch):
    monkeypatch.setenv(DIM_CAP_ENV, "2")
    assert default_dim_cap() == 2
    with pytest.raises(ResourceError):
        build_kac_module(SL21, Weight.zero(SL21))


def test_env_cap_rejects_garbage(monkeypatch):
    monkeypatch.setenv(DIM_CAP_ENV, "not-a-number")
    with pytest.raises(DomainError, match=DIM_CAP_ENV):
        default_dim_cap()
