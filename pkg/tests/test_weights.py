"""Weight arithmetic, parsing, and the named special weights."""

from __future__ import annotations

from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supercoh.errors import DomainError, ParseError, RangeError
from supercoh.weights import (
    AlgebraSpec,
    Weight,
    alpha_max,
    alpha_min,
    bilinear_form,
    even_positive_roots,
    odd_positive_roots,
    odd_root,
    odd_root_index_pairs,
    odd_subset_representations,
    special_weight,
)

SL21 = AlgebraSpec("sl", 2, 1)
SL32 = AlgebraSpec("sl", 3, 2)
SL43 = AlgebraSpec("sl", 4, 3)
O2 = AlgebraSpec("ospc", 2, 2)
O3 = AlgebraSpec("ospc", 2, 3)


# ---------------------------------------------------------------------------
# AlgebraSpec
# ---------------------------------------------------------------------------


def test_algebra_spec_rejects_n_above_m():
    with pytest.raises(DomainError, match="swap the two ranks"):
        AlgebraSpec("sl", 2, 3)


def test_algebra_spec_rejects_bad_ospc_ranks():
    with pytest.raises(DomainError):
        AlgebraSpec("ospc", 3, 2)
    with pytest.raises(DomainError):
        AlgebraSpec("ospc", 2, 1)


def test_algebra_spec_rejects_unknown_family():
    with pytest.raises(DomainError):
        AlgebraSpec("so", 3, 1)


def test_algebra_spec_str_and_sizes():
    assert str(SL32) == "sl(3|2)"
    assert str(O3) == "osp(2|4)"
    assert SL32.coord_len == 5
    assert O3.coord_len == 3
    assert SL32.num_odd_positive == 6
    assert O3.num_odd_positive == 4


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def test_parse_round_trip_sl():
    w = Weight.parse(SL32, "2,1,0|-1,-2")
    assert str(w) == "2,1,0|-1,-2"
    assert w.even_block == (Q(2), Q(1), Q(0))
    assert w.odd_block == (Q(-1), Q(-2))


def test_parse_round_trip_ospc():
    w = Weight.parse(O3, "4|0,0")
    assert w.coords == (Q(4), Q(0), Q(0))


def test_parse_accepts_fractions():
    w = Weight.parse(SL21, "1/2,0|-1/2")
    assert w.coords[0] == Q(1, 2)


@pytest.mark.parametrize(
    "text",
    ["1,0", "1,0|2|3", "1|0,0", "1,0,0|-1", "a,b|c", "1,,0|-1"],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(ParseError):
        Weight.parse(SL21, text)


def test_weight_needs_exact_coordinate_count():
    with pytest.raises(DomainError):
        Weight(SL21, (Q(1), Q(0)))


# ---------------------------------------------------------------------------
# Dynkin labels
# ---------------------------------------------------------------------------


def test_dynkin_labels_sl():
    w = Weight.parse(SL32, "2,1,0|-1,-2")
    evens, a0, odds = w.dynkin_labels()
    assert evens == (Q(1), Q(1))
    assert a0 == Q(-1)
    assert odds == (Q(1),)


def test_dynkin_text_and_parse_inverse():
    w = Weight.parse(SL32, "2,1,0|-1,-2")
    again = Weight.parse_dynkin(SL32, w.dynkin_text())
    assert again == w


def test_from_dynkin_picks_trace_zero_representative():
    w = Weight.from_dynkin(SL21, ((Q(1),), Q(0), ()))
    assert w == Weight.parse(SL21, "0,-1|1")
    assert sum(w.coords) == 0


@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4))
@settings(max_examples=60, deadline=None)
def test_dynkin_round_trip_on_integral_grid(labels):
    evens = (Q(labels[0]), Q(labels[1]))
    a0 = Q(labels[2])
    odds = (Q(labels[3]),)
    w = Weight.from_dynkin(SL32, (evens, a0, odds))
    assert w.dynkin_labels() == (evens, a0, odds)
    assert sum(w.coords) == 0


def test_from_dynkin_equal_ranks_can_fail():
    alg = AlgebraSpec("sl", 2, 2)
    with pytest.raises(DomainError):
        Weight.from_dynkin(alg, ([Q(0)], Q(1, 3), [Q(0)]))


# ---------------------------------------------------------------------------
# structure predicates
# ---------------------------------------------------------------------------


def test_is_dominant_blockwise():
    assert Weight.parse(SL32, "2,1,1|-1,-3").is_dominant()
    assert not Weight.parse(SL32, "1,2,0|0,0").is_dominant()
    assert not Weight.parse(SL32, "2,1,0|-3,-1").is_dominant()


def test_is_dominant_ospc_needs_nonnegative_tail():
    assert Weight.parse(O3, "3|1,0").is_dominant()
    assert not Weight.parse(O3, "3|0,-1").is_dominant()
    assert not Weight.parse(O3, "3|0,1").is_dominant()


def test_is_integral_uses_labels():
    assert Weight.parse(SL21, "1,0|-1").is_integral()
    assert not Weight.parse(SL21, "1/2,0|-1/2").is_integral()


def test_level_reverse_supertrace():
    w = Weight.parse(SL32, "2,1,0|-1,-2")
    assert w.level() == 3  # even-block sum
    assert Weight.zero(SL32).level() == 0
    assert Weight.parse(O3, "4|1,0").level() == 4
    assert w.reverse() == Weight.parse(SL32, "0,1,2|-2,-1")
    assert w.supertrace() == (2 + 1 + 0) - (-1 - 2)
    with pytest.raises(DomainError):
        Weight.parse(O3, "3|1,0").reverse()


def test_arithmetic_is_exact():
    a = Weight.parse(SL21, "1,0|-1")
    b = Weight.parse(SL21, "0,1|-1")
    assert str(a + b) == "1,1|-2"
    assert (a - a).is_zero()
    assert (-a).coords == (Q(-1), Q(0), Q(1))
    assert (Q(1, 2) * a).coords == (Q(1, 2), Q(0), Q(-1, 2))
    with pytest.raises(DomainError):
        a + Weight.zero(SL32)


def test_sort_key_orders_by_level_first():
    lo = Weight.parse(SL21, "0,0|0")
    hi = Weight.parse(SL21, "1,1|-2")
    assert sorted([hi, lo], key=lambda w: w.sort_key()) == [lo, hi]


# ---------------------------------------------------------------------------
# root lists and the odd total order
# ---------------------------------------------------------------------------


def test_even_root_count():
    # sl(3|2): 3 + 1 positive even roots, osp(2|4): the sp(4) positives only
    assert len(even_positive_roots(SL32)) == 4
    assert len(even_positive_roots(O3)) == 4


def test_odd_root_count_and_membership():
    roots = odd_positive_roots(SL43)
    assert len(roots) == 12
    assert roots[0] == alpha_min(SL43)
    assert roots[-1] == alpha_max(SL43)
    assert len(set(roots)) == len(roots)


def test_odd_order_is_a_strict_total_order():
    # key (nu - i, -i) strictly increases along the frozen enumeration
    for m in range(1, 7):
        for n in range(1, m + 1):
            if m * n > 30:
                continue
            alg = AlgebraSpec("sl", m, n)
            pairs = odd_root_index_pairs(alg)
            keys = [(nu - i, -i) for i, nu in pairs]
            assert keys == sorted(keys)
            assert len(set(keys)) == len(keys)
            assert odd_root(alg, *pairs[0]) == alpha_min(alg)
            assert odd_root(alg, *pairs[-1]) == alpha_max(alg)


def test_odd_roots_sum_to_two_rho1():
    for alg in (SL21, SL32, SL43, O2, O3):
        total = Weight.zero(alg)
        for r in odd_positive_roots(alg):
            total = total + r
        assert total == special_weight(alg, "two_rho1")


def test_alpha_min_max_coordinates():
    assert str(alpha_min(SL32)) == "0,0,1|-1,0"
    assert str(alpha_max(SL32)) == "1,0,0|0,-1"
    assert str(alpha_min(O2)) == "1|-1"
    assert str(alpha_max(O2)) == "1|1"
    assert str(alpha_min(O3)) == "1|-1,0"
    assert str(alpha_max(O3)) == "1|1,0"


# ---------------------------------------------------------------------------
# special weights
# ---------------------------------------------------------------------------


def test_two_rho1_values():
    assert str(special_weight(SL21, "two_rho1")) == "1,1|-2"
    assert str(special_weight(SL43, "two_rho1")) == "3,3,3,3|-4,-4,-4"
    assert str(special_weight(O3, "two_rho1")) == "4|0,0"


def test_mu_j_family_values():
    assert str(special_weight(SL21, "mu_j", j=0)) == "1,1|-2"
    assert [str(special_weight(SL32, "mu_j", j=j)) for j in range(2)] == [
        "1,1,0|0,-2",
        "2,1,1|-1,-3",
    ]
    assert [str(special_weight(SL43, "mu_j", j=j)) for j in range(3)] == [
        "1,1,0,0|0,0,-2",
        "2,1,1,0|0,-1,-3",
        "3,1,1,1|-1,-1,-4",
    ]


def test_mu_j_window():
    with pytest.raises(RangeError):
        special_weight(SL32, "mu_j", j=2)
    with pytest.raises(RangeError):
        special_weight(SL32, "mu_j", j=-1)


def test_mu_ij_values_and_window():
    # mu_ij(1, j) is the mu_j family; higher i blocks sit lower and need not
    # be dominant on their own
    assert special_weight(SL43, "mu_ij", i=1, j=1) == special_weight(SL43, "mu_j", j=1)
    assert str(special_weight(SL43, "mu_ij", i=2, j=1)) == "0,2,1,1|-1,-3,0"
    assert str(special_weight(SL43, "mu_ij", i=3, j=0)) == "0,0,1,1|-2,0,0"
    # window: 1 <= i <= n and 0 <= j <= n - i
    with pytest.raises(RangeError):
        special_weight(SL43, "mu_ij", i=2, j=2)
    with pytest.raises(RangeError):
        special_weight(SL43, "mu_ij", i=4, j=0)
    with pytest.raises(RangeError):
        special_weight(SL43, "mu_ij", i=0, j=1)


def test_mu_j_plus_minus_are_alpha_max_shifts():
    amax = alpha_max(SL32)
    for j in range(2):
        base = special_weight(SL32, "mu_j", j=j)
        assert special_weight(SL32, "mu_j_plus", j=j) == base + amax
        assert special_weight(SL32, "mu_j_minus", j=j) == base - amax


def test_eta_weights():
    assert str(special_weight(SL32, "eta1")) == "1,1,0|-1,-1"
    assert str(special_weight(SL32, "eta2")) == "0,-1,-1|1,1"
    with pytest.raises(RangeError):
        special_weight(SL21, "eta1")


def test_minus_amin_kinds():
    assert special_weight(SL21, "minus_amin") == -alpha_min(SL21)
    assert special_weight(SL21, "minus_2amin") == Q(-2) * alpha_min(SL21)
    assert special_weight(SL21, "two_amax") == Q(2) * alpha_max(SL21)


def test_special_weights_are_dominant():
    for alg in (SL21, SL32, SL43):
        for kind in ("two_rho1", "minus_amin", "minus_2amin", "two_amax"):
            assert special_weight(alg, kind).is_dominant(), (alg, kind)
        for j in range(alg.n):
            assert special_weight(alg, "mu_j", j=j).is_dominant()
            assert special_weight(alg, "mu_j_plus", j=j).is_dominant()


def test_unknown_special_kind():
    with pytest.raises(DomainError):
        special_weight(SL21, "mu_top")


# ---------------------------------------------------------------------------
# sums of distinct odd positive roots
# ---------------------------------------------------------------------------


def test_two_rho1_has_unique_odd_subset():
    for m in range(1, 6):
        for n in range(1, m + 1):
            if m * n > 20:
                continue
            alg = AlgebraSpec("sl", m, n)
            reps = odd_subset_representations(alg, special_weight(alg, "two_rho1"))
            assert len(reps) == 1
            assert len(reps[0]) == m * n


def test_single_root_targets():
    assert len(odd_subset_representations(SL43, alpha_max(SL43))) == 1
    assert odd_subset_representations(SL43, Weight.zero(SL43)) == [()]
    assert odd_subset_representations(SL43, -special_weight(SL43, "two_rho1")) == []


def test_subset_representations_actually_sum():
    target = special_weight(SL32, "mu_j", j=1) - alpha_min(SL32)
    roots = odd_positive_roots(SL32)
    for rep in odd_subset_representations(SL32, target):
        total = Weight.zero(SL32)
        for k in rep:
            total = total + roots[k]
        assert total == target
        assert len(set(rep)) == len(rep)


# ---------------------------------------------------------------------------
# bilinear form
# ---------------------------------------------------------------------------


def test_bilinear_form_signature():
    eps1 = Weight.parse(SL21, "1,0|0")
    delta1 = Weight.parse(SL21, "0,0|1")
    assert bilinear_form(eps1, eps1) == 1
    assert bilinear_form(delta1, delta1) == -1
    assert bilinear_form(eps1, delta1) == 0


def test_odd_roots_are_isotropic():
    for alg in (SL21, SL32, O2, O3):
        for r in odd_positive_roots(alg):
            assert bilinear_form(r, r) == 0
