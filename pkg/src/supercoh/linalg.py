"""Exact linear algebra over the rationals.

Two workhorses live here: a fraction-free (Bareiss) rank for integer
matrices, which is what the cohomology ranks run on after clearing
denominators, and a small Fraction row-echelon toolkit for solving,
nullspaces, and span membership.  Everything is deterministic: pivots are
chosen by position, never by magnitude heuristics that could depend on hash
order.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Q = Fraction


def bareiss_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination.

    Mutates a copy, not the input.  Intermediate entries stay integral and
    (by the Bareiss identity) no larger than minors of the input, which keeps
    big-int growth polynomial.
    """
    if not rows:
        return 0
    a = [row[:] for row in rows]
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, nrows):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            continue
        if piv != row:
            a[row], a[piv] = a[piv], a[row]
        pivot = a[row][col]
        for r in range(row + 1, nrows):
            arc = a[r][col]
            ar = a[r]
            ap = a[row]
            for c in range(col + 1, ncols):
                ar[c] = (pivot * ar[c] - arc * ap[c]) // prev
            ar[col] = 0
        prev = pivot
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


def clear_denominators(row: dict[int, Q]) -> dict[int, int]:
    """Scale a sparse rational row to a primitive integer row."""
    if not row:
        return {}
    lcm = 1
    for v in row.values():
        d = v.denominator
        lcm = lcm // gcd(lcm, d) * d
    ints = {c: int(v * lcm) for c, v in row.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if g > 1:
        ints = {c: v // g for c, v in ints.items()}
    return ints


def sparse_rank(rows: Iterable[dict[int, Q]], ncols: int) -> int:
    """Rank of a sparse rational matrix (rows are {col: value} dicts)."""
    dense: list[list[int]] = []
    for row in rows:
        ints = clear_denominators(row)
        if ints:
            r = [0] * ncols
            for c, v in ints.items():
                r[c] = v
            dense.append(r)
    return bareiss_rank(dense)


class RowEchelon:
    """Incremental Fraction row echelon with expression tracking.

    Feed vectors one at a time; each reduced nonzero vector is stored with
    its pivot column.  `coords` answers "is v in the span, and with which
    coefficients in terms of the vectors previously added?".
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, int] = {}  # pivot col -> row index
        self.rows: list[list[Q]] = []
        self.exprs: list[list[Q]] = []  # row -> coeffs over inserted vectors
        self.count = 0  # vectors inserted so far (including dependent ones)

    def _reduce(self, vec: Sequence[Q]) -> tuple[list[Q], list[Q]]:
        v = list(vec)
        expr = [Q(0)] * self.count
        for col in sorted(self.pivots):
            if v[col]:
                r = self.pivots[col]
                factor = v[col]
                row = self.rows[r]
                for c in range(col, self.ncols):
                    if row[c]:
                        v[c] -= factor * row[c]
                rexpr = self.exprs[r]
                for i, x in enumerate(rexpr):
                    if x:
                        expr[i] -= factor * x
        return v, expr

    def add(self, vec: Sequence[Q]) -> bool:
        """Insert a vector; True if it increased the rank."""
        v, expr = self._reduce(vec)
        expr.append(Q(1))
        self.count += 1
        for col in range(self.ncols):
            if v[col]:
                inv = Q(1) / v[col]
                v = [x * inv for x in v]
                expr = [x * inv for x in expr]
                self.rows.append(v)
                self.exprs.append(expr)
                self.pivots[col] = len(self.rows) - 1
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)

    def coords(self, vec: Sequence[Q]) -> list[Q] | None:
        """Coefficients expressing vec over the independent inserted vectors,
        or None if vec is outside the span.  Dependent insertions get
        coefficient contributions folded into the earlier ones."""
        v, expr = self._reduce(vec)
        if any(v):
            return None
        return [-x for x in expr]

    def contains(self, vec: Sequence[Q]) -> bool:
        v, _ = self._reduce(vec)
        return not any(v)


def rref(rows: list[list[Q]]) -> tuple[list[list[Q]], list[int]]:
    """Reduced row echelon form; returns (rref rows, pivot columns)."""
    a = [list(r) for r in rows]
    if not a:
        return [], []
    nrows, ncols = len(a), len(a[0])
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if a[r][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = Q(1) / a[row][col]
        a[row] = [x * inv for x in a[row]]
        for r in range(nrows):
            if r != row and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    return a[:row], pivots


def nullspace(rows: list[list[Q]], ncols: int) -> list[list[Q]]:
    """Basis of the right nullspace, deterministic (free columns ascending)."""
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    basis: list[list[Q]] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Q(0)] * ncols
        v[free] = Q(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][free]
        basis.append(v)
    return basis


def solve(rows: list[list[Q]], rhs: list[Q]) -> list[Q] | None:
    """One solution of A x = b, or None.  Free variables are set to zero."""
    if not rows:
        return None if any(rhs) else []
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    for r in red:
        if r[ncols] and not any(r[:ncols]):
            return None
    x = [Q(0)] * ncols
    for r, pc in enumerate(pivots):
        if pc < ncols:
            x[pc] = red[r][ncols]
    return x
