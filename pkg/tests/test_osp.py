"""The matrix realization of osp(2|2n-2) and its weight labels."""

from __future__ import annotations

from fractions import Fraction as Q

import pytest

from supercoh.errors import DomainError, RangeError
from supercoh.osp import build_osp, osp_weight_from_labels, osp_weight_labels
from supercoh.rootsystem import build_root_system, check_super_jacobi, supercommutator
from supercoh.weights import AlgebraSpec, Weight, alpha_min, alpha_max, special_weight

O2 = AlgebraSpec("ospc", 2, 2)
O3 = AlgebraSpec("ospc", 2, 3)
O4 = AlgebraSpec("ospc", 2, 4)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_graded_dimensions(n):
    real = build_osp(n)
    assert real.dim_g0 == 1 + (n - 1) * (2 * n - 1)
    assert real.dim_g1 == 2 * (n - 1)
    assert len(real.g_minus) == 2 * (n - 1)
    assert len(real.cartans) == n
    assert real.size == 2 * n


def test_rejects_small_rank():
    with pytest.raises(RangeError):
        build_osp(1)


def test_parities_follow_the_grading():
    real = build_osp(3)
    assert all(b.parity == 0 for b in real.g0)
    assert all(b.parity == 1 for b in real.g_plus + real.g_minus)


def test_bracket_respects_degree():
    # [g_{+1}, g_{+1}] = 0 and [g_{+1}, g_{-1}] lands in g_0
    real = build_osp(3)
    rs = real.root_system
    plus = [rs.odd_e_idx[k] for k in range(len(real.g_plus))]
    minus = [rs.odd_f_idx[k] for k in range(len(real.g_minus))]
    for i in plus:
        for j in plus:
            assert rs.bracket(i, j) == {}
    for i in plus:
        for j in minus:
            for k in rs.bracket(i, j):
                assert rs.parity(k) == 0


def test_super_jacobi():
    for n in (2, 3):
        assert check_super_jacobi(build_osp(n).root_system)


def test_rho1_is_scaled_eps():
    for alg, n in ((O2, 2), (O3, 3), (O4, 4)):
        rho1 = special_weight(alg, "rho1")
        assert rho1 == Weight(alg, (Q(n - 1),) + (Q(0),) * (n - 1))
        assert special_weight(alg, "two_rho1") == 2 * rho1


def test_weight_labels_pinned_values():
    tr = special_weight(O3, "two_rho1")
    assert osp_weight_labels(tr) == [Q(4), Q(0), Q(0)]
    assert osp_weight_labels(-alpha_min(O3)) == [Q(0), Q(1), Q(0)]
    assert osp_weight_labels(Weight.zero(O3)) == [Q(0), Q(0), Q(0)]
    assert osp_weight_labels(alpha_max(O3)) == [Q(2), Q(1), Q(0)]


def test_weight_labels_round_trip():
    for alg in (O2, O3, O4):
        for w in (
            special_weight(alg, "two_rho1"),
            -alpha_min(alg),
            -2 * alpha_min(alg),
            special_weight(alg, "two_rho1") + alpha_max(alg),
        ):
            assert osp_weight_from_labels(alg, osp_weight_labels(w)) == w


def test_weight_labels_reject_sl_weights():
    sl = AlgebraSpec("sl", 2, 1)
    with pytest.raises(DomainError):
        osp_weight_labels(Weight.zero(sl))
    with pytest.raises(DomainError):
        osp_weight_from_labels(sl, [Q(1)])
    with pytest.raises(DomainError):
        osp_weight_from_labels(O3, [Q(1), Q(0)])


def test_label_linearity():
    a = special_weight(O3, "two_rho1")
    b = -alpha_min(O3)
    la = osp_weight_labels(a)
    lb = osp_weight_labels(b)
    assert osp_weight_labels(a + b) == [x + y for x, y in zip(la, lb)]


def test_realization_closes_under_bracket():
    real = build_osp(2)
    rs = real.root_system
    for i in range(rs.dim):
        for j in range(rs.dim):
            rs.bracket(i, j)  # raises if any product leaves the span


def test_odd_square_of_raising_vector():
    # [x, x] = 2 x^2 for odd x; for the realization this stays in g_0
    real = build_osp(3)
    rs = real.root_system
    for b in real.g_plus:
        sq = supercommutator(b.matrix, 1, b.matrix, 1)
        for k in rs.decompose(sq):
            assert rs.parity(k) == 0
