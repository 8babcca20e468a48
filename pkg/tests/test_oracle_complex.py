"""The rational cochain complex: differentials, contractions, cohomology."""

from __future__ import annotations

from math import comb
from random import Random

import pytest

from supercoh.errors import DomainError, ResourceError
from supercoh.oracle import (
    build_irreducible,
    build_kac_module,
    cohomology_dims,
    verify_cocycle,
)
from supercoh.oracle.complex import (
    apply_d,
    cochain_complex,
    contraction,
    contraction_and_theta,
    invariant_reduction_agrees,
    make_cochain,
    random_cochain,
    theta,
)
from supercoh.weights import AlgebraSpec, Weight, alpha_min, special_weight

SL21 = AlgebraSpec("sl", 2, 1)
O2 = AlgebraSpec("ospc", 2, 2)


def _sw(alg, kind, **kw):
    return special_weight(alg, kind, **kw)


# ---------------------------------------------------------------------------
# cochain space sizes
# ---------------------------------------------------------------------------


def test_cochain_space_dimensions():
    V = build_kac_module(SL21, _sw(SL21, "two_rho1"))
    cx = cochain_complex(SL21, V, p_max=3)
    assert cx.dims[:4] == [4, 32, 128, 352]
    # C^p = sum_{a+b=p} C(dim_even, a) * multiset(dim_odd, b) * dim V
    d_even = d_odd = 4  # sl(2|1) has 4 even and 4 odd basis directions
    expect = [
        sum(comb(d_even, a) * comb(d_odd + b - 1, b) for a in range(p + 1) for b in [p - a])
        * V.dim
        for p in range(4)
    ]
    assert cx.dims[:4] == expect


def test_complex_dimension_cap():
    V = build_kac_module(SL21, _sw(SL21, "two_rho1"))
    with pytest.raises(ResourceError):
        cochain_complex(SL21, V, p_max=3, max_dim=100)


# ---------------------------------------------------------------------------
# d squared and the contraction identities
# ---------------------------------------------------------------------------


def test_d_squared_vanishes_on_complexes():
    for alg, mod in [
        (SL21, build_kac_module(SL21, _sw(SL21, "two_rho1"))),
        (SL21, build_irreducible(SL21, -alpha_min(SL21))),
        (O2, build_kac_module(O2, Weight.zero(O2))),
    ]:
        assert cochain_complex(alg, mod, p_max=2).check_d_squared()


def test_d_squared_vanishes_on_random_cochains_both_parities():
    rng = Random(11)
    for mod in (
        build_kac_module(SL21, _sw(SL21, "two_rho1")),
        build_irreducible(O2, _sw(O2, "two_rho1")),
    ):
        for parity in (0, 1):
            for degree in (0, 1, 2):
                phi = random_cochain(mod, degree, rng, parity=parity)
                assert apply_d(apply_d(phi)).is_zero()


def test_cartan_identity_holds_on_random_samples():
    # d i_x + i_x d = theta_x, exactly, for every basis direction
    rng = Random(23)
    for mod in (
        build_kac_module(SL21, _sw(SL21, "two_rho1")),
        build_irreducible(SL21, _sw(SL21, "two_rho1")),
        build_kac_module(O2, _sw(O2, "two_rho1")),
    ):
        for _ in range(8):
            degree = rng.choice((1, 2))
            phi = random_cochain(mod, degree, rng)
            for x in range(mod.rs.dim):
                i_phi, th_phi = contraction_and_theta(x, phi)
                lhs = apply_d(i_phi).plus(contraction(x, apply_d(phi)))
                diff = lhs.plus(th_phi.scaled(-1))
                assert diff.is_zero(), (mod.kind, degree, x)


def test_contraction_squares_to_zero_on_even_directions():
    rng = Random(5)
    mod = build_kac_module(SL21, _sw(SL21, "two_rho1"))
    phi = random_cochain(mod, 2, rng)
    for x in range(mod.rs.dim):
        if mod.rs.parity(x) == 0:
            assert contraction(x, contraction(x, phi)).is_zero()


def test_theta_of_invariant_cocycle_is_zero():
    # the zero-weight harmonic 1-cochain on V_{2rho1} is killed by theta_h
    mod = build_kac_module(SL21, _sw(SL21, "two_rho1"))
    rng = Random(1)
    phi = random_cochain(mod, 1, rng)
    for x in mod.rs.cartan_idx:
        th = theta(x, phi)
        # theta_h acts by the weight, so on mixed-weight phi it's not zero;
        # this just pins the operator as weight-diagonal
        for (ev, od), vec in th.coeffs.items():
            assert set(vec) <= set(
                phi.coeffs.get((ev, od), {})
            ) or all(c for c in vec.values())


# ---------------------------------------------------------------------------
# cohomology dimensions
# ---------------------------------------------------------------------------


def test_kac_cohomology_rank_one_sweep():
    tr = _sw(SL21, "two_rho1")
    # the bottom of V_{2rho1} is invariant, so H^0 = 1 alongside the H^1 class
    assert cohomology_dims(SL21, build_kac_module(SL21, tr), p_max=3) == [1, 1, 0, 1]
    typical = build_kac_module(SL21, Weight.parse(SL21, "1,0|-1"))
    assert cohomology_dims(SL21, typical, p_max=2) == [0, 0, 0]


def test_trivial_coefficients_see_the_bottom():
    L0 = build_irreducible(SL21, Weight.zero(SL21))
    assert cohomology_dims(SL21, L0, p_max=1) == [1, 0]


def test_degree_zero_counts_invariant_vectors():
    V = build_kac_module(SL21, _sw(SL21, "two_rho1"))
    assert cohomology_dims(SL21, V, p_max=0) == [1]


def test_cohomology_record_shape():
    V = build_kac_module(SL21, _sw(SL21, "two_rho1"))
    cx = cochain_complex(SL21, V, p_max=2)
    rec = cx.cohomology()
    assert [r["degree"] for r in rec] == [0, 1, 2]
    for r in rec:
        assert r["h"] == r["h_even"] + r["h_odd"]
        assert r["dim"] == r["dim_even"] + r["dim_odd"]
    assert rec[1]["h"] == 1


def test_invariant_reduction_agreement_gate():
    for mod in (
        build_kac_module(SL21, _sw(SL21, "two_rho1")),
        build_irreducible(SL21, Weight.zero(SL21)),
        build_kac_module(O2, _sw(O2, "two_rho1")),
    ):
        assert invariant_reduction_agrees(mod.alg, mod, p_max=2)


def test_invariant_reduction_flag_matches_full_run():
    V = build_kac_module(O2, _sw(O2, "two_rho1"))
    full = cohomology_dims(O2, V, p_max=2)
    fast = cohomology_dims(O2, V, p_max=2, invariant_reduction=True)
    assert full == fast == [1, 1, 0]


# ---------------------------------------------------------------------------
# cocycle verification
# ---------------------------------------------------------------------------


def test_zero_cochain_verifies_trivially():
    mod = build_kac_module(SL21, _sw(SL21, "two_rho1"))
    phi = make_cochain(mod, 1, {})
    assert verify_cocycle(phi) == {"is_cocycle": True, "is_coboundary": True}


def test_coboundaries_verify_as_such():
    rng = Random(17)
    mod = build_kac_module(SL21, _sw(SL21, "two_rho1"))
    psi = random_cochain(mod, 1, rng)
    dpsi = apply_d(psi)
    assert not dpsi.is_zero()
    assert verify_cocycle(dpsi) == {"is_cocycle": True, "is_coboundary": True}


def test_verify_rejects_foreign_module():
    mod = build_kac_module(SL21, _sw(SL21, "two_rho1"))
    other = build_kac_module(SL21, Weight.zero(SL21))
    phi = random_cochain(mod, 1, Random(2))
    with pytest.raises(DomainError):
        verify_cocycle(phi, module=other)


def test_make_cochain_validates_degree_and_parity():
    mod = build_kac_module(SL21, _sw(SL21, "two_rho1"))
    with pytest.raises(DomainError):
        make_cochain(mod, 2, {((), (0,)): {0: 1}})
    even_v = next(i for i in range(mod.dim) if mod.parity(i) == 0)
    odd_v = next(i for i in range(mod.dim) if mod.parity(i) == 1)
    with pytest.raises(DomainError):
        make_cochain(mod, 1, {((0,), ()): {even_v: 1, odd_v: 1}})


def test_cochain_weight_readout():
    mod = build_kac_module(SL21, _sw(SL21, "two_rho1"))
    rng = Random(9)
    phi = random_cochain(mod, 1, rng)
    dphi = apply_d(phi)
    # d preserves the weight decomposition; a mixed-weight cochain stays mixed
    assert phi.weight() is None or dphi.is_zero() or dphi.weight() == phi.weight()
