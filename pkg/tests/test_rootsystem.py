"""Matrix realizations and structure constants for both families."""

from __future__ import annotations

from fractions import Fraction as Q
from random import Random

import pytest

from supercoh.errors import DomainError
from supercoh.rootsystem import build_root_system, check_super_jacobi, supercommutator
from supercoh.weights import (
    AlgebraSpec,
    Weight,
    alpha_min,
    alpha_max,
    odd_positive_roots,
    special_weight,
)

SL21 = AlgebraSpec("sl", 2, 1)
SL22 = AlgebraSpec("sl", 2, 2)
SL32 = AlgebraSpec("sl", 3, 2)
O2 = AlgebraSpec("ospc", 2, 2)
O3 = AlgebraSpec("ospc", 2, 3)


def test_dimensions_sl():
    # sl(m|n) has dimension (m+n)^2 - 1
    assert build_root_system(SL21).dim == 8
    assert build_root_system(SL22).dim == 15
    assert build_root_system(SL32).dim == 24


def test_dimensions_ospc():
    # dim g_0 = 1 + (n-1)(2n-1), dim g_{+1} = dim g_{-1} = 2(n-1)
    for n in (2, 3, 4):
        alg = AlgebraSpec("ospc", 2, n)
        rs = build_root_system(alg)
        even = sum(1 for b in rs.basis if b.parity == 0)
        odd = sum(1 for b in rs.basis if b.parity == 1)
        assert even == 1 + (n - 1) * (2 * n - 1)
        assert odd == 4 * (n - 1)


def test_odd_part_splits_evenly():
    for alg in (SL21, SL32, O3):
        rs = build_root_system(alg)
        assert len(rs.odd_e_idx) == alg.num_odd_positive
        assert len(rs.odd_f_idx) == alg.num_odd_positive
        for i in rs.odd_e_idx + rs.odd_f_idx:
            assert rs.parity(i) == 1


def test_basis_roles_sl21():
    rs = build_root_system(SL21)
    roles = [(b.name, b.role, b.parity) for b in rs.basis]
    assert ("h1", "cartan", 0) in roles
    assert ("E(1,2)", "e", 0) in roles
    assert ("E(3,1)", "f", 1) in roles
    assert len(rs.cartan_idx) == 2


def test_root_vectors_carry_their_weight():
    rs = build_root_system(SL32)
    odd = odd_positive_roots(SL32)
    for pos, root in enumerate(odd):
        assert rs.basis[rs.odd_e_idx[pos]].weight == root
        assert rs.basis[rs.odd_f_idx[pos]].weight == -root
    for i in rs.cartan_idx:
        assert rs.basis[i].weight.is_zero()


def test_super_jacobi_small_ranks_exhaustive():
    for alg in (SL21, SL22, O2):
        assert check_super_jacobi(build_root_system(alg))


def test_super_jacobi_larger_ranks():
    assert check_super_jacobi(build_root_system(SL32))
    assert check_super_jacobi(build_root_system(O3))


def test_super_jacobi_sampled_rank_four():
    rs = build_root_system(AlgebraSpec("sl", 4, 2))
    rng = Random(7)
    triples = [
        (rng.randrange(rs.dim), rng.randrange(rs.dim), rng.randrange(rs.dim))
        for _ in range(400)
    ]
    assert check_super_jacobi(rs, triples)


def test_bracket_antisymmetry():
    rs = build_root_system(SL32)
    rng = Random(3)
    for _ in range(200):
        i = rng.randrange(rs.dim)
        j = rng.randrange(rs.dim)
        sign = -1 if rs.parity(i) and rs.parity(j) else 1
        lhs = rs.bracket(i, j)
        rhs = rs.bracket(j, i)
        assert lhs == {k: -sign * v for k, v in rhs.items()}


def test_bracket_adds_weights():
    rs = build_root_system(SL32)
    for i in rs.odd_e_idx:
        for j in rs.odd_f_idx:
            target = rs.basis[i].weight + rs.basis[j].weight
            for k in rs.bracket(i, j):
                assert rs.basis[k].weight == target


def test_odd_squares_lie_in_even_part():
    # [x, x] for odd x is twice the matrix square and stays in g_0
    for alg in (SL21, O2):
        rs = build_root_system(alg)
        for i in rs.odd_e_idx + rs.odd_f_idx:
            for k in rs.bracket(i, i):
                assert rs.parity(k) == 0


def test_g0_simple_pairs_sl():
    rs = build_root_system(SL32)
    pairs = rs.g0_simple_pairs()
    # sl(3) has two simple roots, sl(2) has one
    assert len(pairs) == 3
    for e, f in pairs:
        assert rs.basis[e].role == "e" and rs.basis[f].role == "f"
        assert rs.basis[e].weight == -rs.basis[f].weight
        h = rs.bracket(e, f)
        assert h and all(rs.basis[k].role == "cartan" for k in h)


def test_g0_simple_pairs_ospc():
    rs = build_root_system(O3)
    # sp(4) has two simple roots
    assert len(rs.g0_simple_pairs()) == 2


def test_h_of_odd_root_is_cartan():
    rs = build_root_system(SL21)
    for pos in range(len(rs.odd_e_idx)):
        h = rs.h_of_odd_root(pos)
        coeffs = rs.decompose(h)
        assert coeffs
        assert all(rs.basis[k].role == "cartan" for k in coeffs)


def test_cartan_pairing_reads_off_weights():
    rs = build_root_system(SL21)
    tr = special_weight(SL21, "two_rho1")
    for i in rs.cartan_idx:
        h = rs.basis[i].matrix
        # [h, e_alpha] = alpha(h) e_alpha for the highest root
        pos = len(rs.odd_e_idx) - 1
        e_idx = rs.odd_e_idx[pos]
        out = rs.bracket(i, e_idx)
        expect = rs.cartan_pairing(alpha_max(SL21), h)
        assert out.get(e_idx, Q(0)) == expect


def test_decompose_rejects_foreign_matrix():
    rs = build_root_system(SL21)
    bad = [[Q(1 if r == c else 0) for c in range(3)] for r in range(3)]  # identity: nonzero supertrace
    with pytest.raises(DomainError):
        rs.decompose(bad)


def test_supercommutator_of_odd_pair_is_anticommutator():
    rs = build_root_system(SL21)
    i = rs.odd_e_idx[0]
    a = rs.basis[i].matrix
    got = supercommutator(a, 1, a, 1)
    twice_sq = [[2 * sum(a[r][k] * a[k][c] for k in range(len(a))) for c in range(len(a))] for r in range(len(a))]
    assert [list(map(Q, row)) for row in got] == [list(map(Q, row)) for row in twice_sq]
