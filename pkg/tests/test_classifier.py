"""Closed-form degree-one and degree-two answers for both coefficient kinds."""

from __future__ import annotations

import pytest

from supercoh.classifier import (
    CohomologyAnswer,
    enumerate_h2_irr,
    enveloping_answers,
    h1_irr,
    h1_kac,
    h2_irr,
    h2_kac,
)
from supercoh.errors import DomainError
from supercoh.atypicality import mu_star
from supercoh.weights import AlgebraSpec, Weight, alpha_max, alpha_min, special_weight

SL21 = AlgebraSpec("sl", 2, 1)
SL32 = AlgebraSpec("sl", 3, 2)
SL43 = AlgebraSpec("sl", 4, 3)
O2 = AlgebraSpec("ospc", 2, 2)
O3 = AlgebraSpec("ospc", 2, 3)


def _sw(alg, kind, **kw):
    return special_weight(alg, kind, **kw)


def _sweep(alg):
    tr = _sw(alg, "two_rho1")
    ax = alpha_max(alg)
    return [Weight.zero(alg), tr, tr + ax, tr + 2 * ax]


# ---------------------------------------------------------------------------
# Kac coefficients
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("alg", [SL21, SL32, SL43, O2, O3], ids=str)
def test_h1_kac_sweep(alg):
    assert [h1_kac(alg, w).dimension for w in _sweep(alg)] == [0, 1, 1, 0]


@pytest.mark.parametrize("alg", [SL21, SL32, SL43, O2, O3], ids=str)
def test_h2_kac_sweep(alg):
    assert [h2_kac(alg, w).dimension for w in _sweep(alg)] == [0, 0, 1, 1]


def test_h2_kac_eta_branch_needs_rank_two():
    # 2rho1 + eta^(1) only enters the degree-two list for n >= 2
    w = _sw(SL32, "two_rho1") + _sw(SL32, "eta1")
    ans = h2_kac(SL32, w)
    assert ans.dimension == 1
    assert ans.witness_kind == "phi_21"


def test_h2_kac_witness_kinds_rank_one():
    tr = _sw(SL21, "two_rho1")
    ax = alpha_max(SL21)
    assert h2_kac(SL21, tr + ax).witness_kind == "phi_22"
    assert h2_kac(SL21, tr + 2 * ax).witness_kind == "phi_21"


def test_h1_kac_witness_kinds():
    tr = _sw(SL21, "two_rho1")
    assert h1_kac(SL21, tr).witness_kind == "phi_prime_125"
    assert h1_kac(SL21, tr + alpha_max(SL21)).witness_kind == "phi_18"


def test_kac_answers_are_zero_off_list():
    for w in ("1,0|-1", "2,0|-2", "1,-1|0", "4,1|-5"):
        weight = Weight.parse(SL21, w)
        assert h1_kac(SL21, weight).dimension == 0
        assert h2_kac(SL21, weight).dimension == 0


# ---------------------------------------------------------------------------
# irreducible coefficients
# ---------------------------------------------------------------------------


def test_h1_irr_list_sl():
    for alg in (SL21, SL32, SL43):
        assert h1_irr(alg, -alpha_min(alg)).dimension == 1
        for j in range(alg.n):
            assert h1_irr(alg, _sw(alg, "mu_j", j=j)).dimension == 1
        assert h1_irr(alg, Weight.zero(alg)).dimension == 0


def test_h1_irr_two_rho1_only_hits_for_rank_one():
    # 2rho1 equals mu^(0) exactly when n = 1
    assert h1_irr(SL21, _sw(SL21, "two_rho1")).dimension == 1
    assert h1_irr(SL32, _sw(SL32, "two_rho1")).dimension == 0


def test_h1_irr_witness_kinds():
    assert h1_irr(SL21, -alpha_min(SL21)).witness_kind == "phi1_bottom"
    assert h1_irr(SL21, _sw(SL21, "mu_j", j=0)).witness_kind == "phi1_top"


def test_h1_irr_ospc_list():
    for alg in (O2, O3):
        assert h1_irr(alg, -alpha_min(alg)).dimension == 1
        assert h1_irr(alg, _sw(alg, "two_rho1")).dimension == 1
        assert h1_irr(alg, Weight.zero(alg)).dimension == 0
        assert h1_irr(alg, _sw(alg, "two_rho1") + alpha_max(alg)).dimension == 0


def test_h2_irr_ospc_list():
    for alg in (O2, O3):
        tr = _sw(alg, "two_rho1")
        assert h2_irr(alg, tr + alpha_max(alg)).dimension == 1
        assert h2_irr(alg, -2 * alpha_min(alg)).dimension == 1
        for w in (Weight.zero(alg), tr, tr + 2 * alpha_max(alg), -alpha_min(alg)):
            assert h2_irr(alg, w).dimension == 0


def test_h2_irr_matches_enumeration():
    for alg in (SL21, SL32, SL43):
        listed = set(enumerate_h2_irr(alg))
        for w in listed:
            assert h2_irr(alg, w).dimension == 1
        # spot-check a handful of dominant weights off the list
        tr = _sw(alg, "two_rho1")
        for w in (Weight.zero(alg), tr + 2 * alpha_max(alg), 2 * tr):
            if w not in listed:
                assert h2_irr(alg, w).dimension == 0


def test_h2_irr_counts():
    # (n+1)(n+2)/2, with one coincidence collapsing a pair at n = 1
    assert len(enumerate_h2_irr(SL21)) == 2
    assert len(enumerate_h2_irr(SL32)) == 6
    assert len(enumerate_h2_irr(SL43)) == 10
    assert len(enumerate_h2_irr(AlgebraSpec("sl", 5, 4))) == 15


def test_h2_irr_enumeration_entries():
    lst = enumerate_h2_irr(SL21)
    assert set(str(w) for w in lst) == {"2,1|-3", "0,-2|2"}
    big = enumerate_h2_irr(AlgebraSpec("sl", 4, 3))
    assert str(big[0]) == "2,1,0,0|0,0,-3"
    assert str(big[-1]) == "0,0,-1,-1|1,1,0"


def test_h2_irr_enumeration_is_dominant_and_distinct():
    for alg in (SL21, SL32, SL43):
        lst = enumerate_h2_irr(alg)
        assert len(set(lst)) == len(lst)
        assert all(w.is_dominant() for w in lst)


def test_degree_two_list_is_stable_under_duality():
    for alg in (SL21, SL32, SL43, AlgebraSpec("sl", 5, 4)):
        lst = enumerate_h2_irr(alg)
        assert {mu_star(w) for w in lst} == set(lst)


def test_h1_irr_list_is_stable_under_duality():
    for alg in (SL32, SL43):
        ones = [-alpha_min(alg)] + [_sw(alg, "mu_j", j=j) for j in range(alg.n)]
        for w in ones:
            assert h1_irr(alg, mu_star(w)).dimension == 1


# ---------------------------------------------------------------------------
# answer plumbing
# ---------------------------------------------------------------------------


def test_answers_are_at_most_one_dimensional():
    weights = _sweep(SL32) + [-alpha_min(SL32), -2 * alpha_min(SL32)]
    for w in weights:
        for fn in (h1_kac, h2_kac, h1_irr, h2_irr):
            dim = fn(SL32, w).dimension
            assert dim in (0, 1)


def test_answer_to_dict():
    d = h1_irr(SL21, -alpha_min(SL21)).to_dict()
    assert d == {
        "degree": 1,
        "coefficient_kind": "irreducible",
        "dimension": 1,
        "witness_kind": "phi1_bottom",
    }


def test_non_dominant_weight_is_rejected():
    with pytest.raises(DomainError):
        h1_irr(SL21, Weight.parse(SL21, "0,1|-1"))
    with pytest.raises(DomainError):
        h2_kac(SL21, Weight.parse(SL21, "0,1|-1"))


def test_equal_ranks_warn():
    alg = AlgebraSpec("sl", 2, 2)
    with pytest.warns(UserWarning, match="equal-rank"):
        h1_kac(alg, Weight.zero(alg))


def test_enveloping_answers():
    h1, h2 = enveloping_answers(SL21)
    assert h1.dimension == "nonzero"
    assert h1.witness_kind == "pbw_ad_witness"
    assert h2.dimension == 0
    assert isinstance(h1, CohomologyAnswer)
