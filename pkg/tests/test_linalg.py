"""Exact rank / solve / nullspace over the rationals."""

from __future__ import annotations

from fractions import Fraction as Q

from hypothesis import given, settings
from hypothesis import strategies as st

from supercoh.linalg import (
    RowEchelon,
    bareiss_rank,
    clear_denominators,
    nullspace,
    rref,
    solve,
    sparse_rank,
)


def test_bareiss_rank_known_matrices():
    assert bareiss_rank([]) == 0
    assert bareiss_rank([[0, 0], [0, 0]]) == 0
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[1, 2], [3, 4]]) == 2
    assert bareiss_rank([[2, 0, 1], [0, 3, 0]]) == 2
    # 3x3 with a forced pivot swap
    assert bareiss_rank([[0, 1, 0], [1, 0, 0], [0, 0, 1]]) == 3


def test_clear_denominators_primitive():
    row = {0: Q(1, 2), 3: Q(-2, 3)}
    cleared = clear_denominators(row)
    assert cleared == {0: 3, 3: -4}


def test_sparse_rank_matches_dense():
    rows = [{0: Q(1), 2: Q(2)}, {0: Q(2), 2: Q(4)}, {1: Q(1, 3)}]
    assert sparse_rank(rows, 3) == 2
    dense = [[1, 0, 2], [2, 0, 4], [0, 1, 0]]
    assert bareiss_rank(dense) == 2


def test_rref_pivots():
    reduced, pivots = rref([[Q(0), Q(2)], [Q(1), Q(1)]])
    assert pivots == [0, 1]
    assert reduced[0][0] == 1 and reduced[1][1] == 1
    assert reduced[0][1] == 0


def test_nullspace_annihilates():
    rows = [[Q(1), Q(2), Q(3)], [Q(2), Q(4), Q(6)]]
    basis = nullspace(rows, 3)
    assert len(basis) == 2
    for vec in basis:
        for row in rows:
            assert sum(r * v for r, v in zip(row, vec)) == 0


def test_solve_consistent_and_inconsistent():
    rows = [[Q(1), Q(1)], [Q(0), Q(1)]]
    x = solve(rows, [Q(3), Q(1)])
    assert x is not None
    assert [sum(r * v for r, v in zip(row, x)) for row in rows] == [Q(3), Q(1)]
    assert solve([[Q(1), Q(1)], [Q(2), Q(2)]], [Q(0), Q(1)]) is None


def test_row_echelon_tracks_expressions():
    ech = RowEchelon(3)
    assert ech.add([Q(1), Q(0), Q(1)])
    assert ech.add([Q(0), Q(1), Q(0)])
    assert not ech.add([Q(1), Q(1), Q(1)])  # dependent
    assert ech.rank == 2
    coeffs = ech.coords([Q(2), Q(3), Q(2)])
    assert coeffs is not None
    assert ech.contains([Q(1), Q(-1), Q(1)])
    assert not ech.contains([Q(0), Q(0), Q(1)])
    assert ech.coords([Q(0), Q(0), Q(1)]) is None


@given(
    st.lists(
        st.lists(st.integers(-6, 6), min_size=4, max_size=4),
        min_size=1,
        max_size=5,
    )
)
@settings(max_examples=80, deadline=None)
def test_rank_paths_agree(mat):
    dense = bareiss_rank([row[:] for row in mat])
    sparse = sparse_rank(
        [{j: Q(v) for j, v in enumerate(row) if v} for row in mat], 4
    )
    ech = RowEchelon(4)
    for row in mat:
        ech.add([Q(v) for v in row])
    assert dense == sparse == ech.rank
    assert dense <= min(len(mat), 4)


@given(
    st.lists(
        st.lists(st.integers(-5, 5), min_size=3, max_size=3),
        min_size=2,
        max_size=4,
    )
)
@settings(max_examples=60, deadline=None)
def test_rank_nullity(mat):
    rows = [[Q(v) for v in row] for row in mat]
    rank = sparse_rank([{j: v for j, v in enumerate(r) if v} for r in rows], 3)
    basis = nullspace(rows, 3)
    assert rank + len(basis) == 3
    for vec in basis:
        for row in rows:
            assert sum(r * v for r, v in zip(row, vec)) == 0
