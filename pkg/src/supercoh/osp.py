"""The algebra osp(2|2n-2) realized concretely inside sl(2|2n-2).

The realization is by explicit 2n x 2n matrices: even indices 0, 1 carry
the two-dimensional block, odd indices 2..2n-1 carry the symplectic
space, with delta_j living at index j+1 and its symplectic mirror at
n+j.  Degree-zero matrices look like

    [ a   0  |        ]
    [ 0  -a  |   0    ]
    [--------+--------]
    [        | b    c ]
    [   0    | d  -b^T]

with c, d symmetric, and the degree +-1 pieces are cut out of the
off-diagonal blocks by a pair of row vectors (xi, eta).  Keeping
everything as matrices means supercommutators are plain arithmetic and
no sign conventions enter by hand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, RangeError
from .weights import FAMILY_OSPC, AlgebraSpec, Weight
from .rootsystem import BasisElement, Mat, RootSystem, build_root_system

Q = Fraction

__all__ = [
    "OspRealization",
    "build_osp",
    "osp_weight_labels",
    "osp_weight_from_labels",
]


@dataclass(frozen=True)
class OspRealization:
    """The graded pieces of osp(2|2n-2), sorted and shape-checked."""

    n: int
    size: int  # matrices are size x size
    cartans: tuple[BasisElement, ...]  # h_1 .. h_n
    g0: tuple[BasisElement, ...]  # Cartans plus all even root vectors
    g_plus: tuple[BasisElement, ...]  # degree +1 (odd raising)
    g_minus: tuple[BasisElement, ...]  # degree -1 (odd lowering)
    root_system: RootSystem

    @property
    def dim_g0(self) -> int:
        return len(self.g0)

    @property
    def dim_g1(self) -> int:
        return len(self.g_plus)


def _check_g0_shape(mat: Mat, n: int) -> None:
    """Degree-zero block pattern: diag(a, -a) on the even part, an
    sp(2n-2) matrix [[b, c], [d, -b^T]] with c, d symmetric on the odd
    part, nothing in the mixed blocks."""
    size = 2 * n
    k = n - 1
    for r in range(size):
        for c in range(size):
            r_even, c_even = r < 2, c < 2
            if r_even != c_even and mat[r][c]:
                raise AssertionError("degree-0 matrix meets an odd block")
    if mat[0][1] or mat[1][0] or mat[0][0] + mat[1][1]:
        raise AssertionError("even 2x2 block is not diag(a, -a)")
    for a in range(k):
        for b in range(k):
            if mat[n + 1 + a][n + 1 + b] != -mat[b + 2][a + 2]:
                raise AssertionError("lower-right block is not -b^T")
            if mat[a + 2][n + 1 + b] != mat[b + 2][n + 1 + a]:
                raise AssertionError("c block is not symmetric")
            if mat[n + 1 + a][b + 2] != mat[n + 1 + b][a + 2]:
                raise AssertionError("d block is not symmetric")


def _check_g1_shape(mat: Mat, n: int, degree: int) -> None:
    """Degree +-1 pattern: one even row and one even column carry the
    (xi, eta) pair, mirrored with a sign into the other off-diagonal
    block; the remaining even row/column is zero."""
    k = n - 1
    live_row, dead_row = (0, 1) if degree > 0 else (1, 0)
    live_col, dead_col = (1, 0) if degree > 0 else (0, 1)
    for c in range(2, 2 * n):
        if mat[dead_row][c]:
            raise AssertionError("dead even row is populated")
    for r in range(2, 2 * n):
        if mat[r][dead_col]:
            raise AssertionError("dead even column is populated")
    for a in range(k):
        xi = mat[live_row][a + 2]
        eta = mat[live_row][n + 1 + a]
        if mat[a + 2][live_col] != -eta:
            raise AssertionError("column copy of eta misses the sign")
        if mat[n + 1 + a][live_col] != xi:
            raise AssertionError("column copy of xi is wrong")


def build_osp(n: int) -> OspRealization:
    """Construct osp(2|2n-2) for n >= 2, with every basis matrix checked
    against the block patterns above and the graded dimensions pinned."""
    if n < 2:
        raise RangeError(f"osp(2|2n-2) needs n >= 2, got n = {n}")
    alg = AlgebraSpec(FAMILY_OSPC, 2, n)
    rs = build_root_system(alg)
    cartans = tuple(rs.basis[i] for i in rs.cartan_idx)
    g0 = cartans + tuple(
        rs.basis[i] for i in (*rs.even_e_idx, *rs.even_f_idx)
    )
    g_plus = tuple(rs.basis[i] for i in rs.odd_e_idx)
    g_minus = tuple(rs.basis[i] for i in rs.odd_f_idx)

    for b in g0:
        _check_g0_shape(b.matrix, n)
    for b in g_plus:
        _check_g1_shape(b.matrix, n, +1)
    for b in g_minus:
        _check_g1_shape(b.matrix, n, -1)
    assert len(g0) == 1 + (n - 1) * (2 * n - 1), "dim of the even part is off"
    assert len(g_plus) == len(g_minus) == 2 * (n - 1)
    assert len(cartans) == n

    return OspRealization(
        n=n,
        size=2 * n,
        cartans=cartans,
        g0=g0,
        g_plus=g_plus,
        g_minus=g_minus,
        root_system=rs,
    )


@lru_cache(maxsize=None)
def _cached_osp(n: int) -> OspRealization:
    return build_osp(n)


def osp_weight_labels(w: Weight) -> list[Q]:
    """Labels [a_1; a_2, ..., a_n] of a weight, where a_i = w(h_i).

    Computed by pairing with the actual Cartan matrices h_1..h_n of the
    realization, not from a closed formula.
    """
    if w.alg.family != FAMILY_OSPC:
        raise DomainError(f"weight {w} is not an osp(2|2n-2) weight")
    if len(w.coords) != w.alg.n:
        raise DomainError(
            f"expected {w.alg.n} coordinates, got {len(w.coords)}"
        )
    real = _cached_osp(w.alg.n)
    rs = real.root_system
    return [rs.cartan_pairing(w, h.matrix) for h in real.cartans]


def osp_weight_from_labels(alg: AlgebraSpec, labels) -> Weight:
    """Inverse of :func:`osp_weight_labels`.

    From a_n = c_{n-1} and a_i = c_{i-1} - c_i (2 <= i <= n-1) the delta
    coordinates unwind from the right; a_1 = c_0 + c_1 then fixes the
    eps coordinate.
    """
    if alg.family != FAMILY_OSPC:
        raise DomainError("labels [a_1; a_2, ...] belong to osp(2|2n-2)")
    vals = [Q(x) for x in labels]
    n = alg.n
    if len(vals) != n:
        raise DomainError(f"expected {n} labels, got {len(vals)}")
    delta = [Q(0)] * (n - 1)
    delta[n - 2] = vals[n - 1]
    for i in range(n - 1, 1, -1):  # a_i = c_{i-1} - c_i
        delta[i - 2] = vals[i - 1] + delta[i - 1]
    eps = vals[0] - delta[0]
    return Weight(alg, (eps, *delta))
