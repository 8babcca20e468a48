"""Matrix realizations of sl(m|n) and osp(2|2n-2) with a frozen basis.

Basis order, once and for all: Cartan elements, then raising vectors (even
roots first, then odd roots in their total order), then the matching lowering
vectors in the same order.  Everything downstream (module actions, cochain
bases, PBW words) indexes into this order, so it must never change.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .errors import DomainError
from .linalg import RowEchelon
from .weights import (
    FAMILY_OSPC,
    FAMILY_SL,
    AlgebraSpec,
    Weight,
    even_positive_roots,
    odd_positive_roots,
    odd_root_index_pairs,
)

Q = Fraction
Mat = tuple[tuple[Q, ...], ...]


def _zeros(n: int) -> list[list[Q]]:
    return [[Q(0)] * n for _ in range(n)]


def _freeze(rows: list[list[Q]]) -> Mat:
    return tuple(tuple(r) for r in rows)


def _unit(n: int, r: int, c: int, val: int = 1) -> list[list[Q]]:
    m = _zeros(n)
    m[r][c] = Q(val)
    return m


def _add(a: list[list[Q]], b: list[list[Q]], sign: int = 1) -> list[list[Q]]:
    return [[x + sign * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_mul(a: Mat, b: Mat) -> Mat:
    n = len(a)
    out = _zeros(n)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(n):
            x = ai[k]
            if x:
                bk = b[k]
                for j in range(n):
                    if bk[j]:
                        oi[j] += x * bk[j]
    return _freeze(out)


def supercommutator(a: Mat, pa: int, b: Mat, pb: int) -> Mat:
    """[a, b] = ab - (-1)^(pa pb) ba for homogeneous matrices."""
    ab = mat_mul(a, b)
    ba = mat_mul(b, a)
    s = -1 if (pa and pb) else 1
    return _freeze([[x - s * y for x, y in zip(ra, rb)] for ra, rb in zip(ab, ba)])


@dataclass(frozen=True)
class BasisElement:
    name: str
    parity: int
    role: str  # "cartan" | "e" | "f"
    matrix: Mat
    weight: Weight  # zero for Cartan elements


class RootSystem:
    """A frozen basis of the algebra together with structure constants."""

    def __init__(self, alg: AlgebraSpec):
        self.alg = alg
        if alg.family == FAMILY_SL:
            self.size = alg.m + alg.n
            self.index_parity = tuple(0 if i < alg.m else 1 for i in range(self.size))
        else:
            self.size = 2 * alg.n
            self.index_parity = tuple(0 if i < 2 else 1 for i in range(self.size))
        self.basis: list[BasisElement] = []
        self.cartan_idx: list[int] = []
        self.even_e_idx: list[int] = []
        self.odd_e_idx: list[int] = []
        self.even_f_idx: list[int] = []
        self.odd_f_idx: list[int] = []
        self._build()
        self._solver = RowEchelon(self.size * self.size)
        for b in self.basis:
            added = self._solver.add([x for row in b.matrix for x in row])
            if not added:
                raise AssertionError(f"dependent basis element {b.name}")
        self._bracket_cache: dict[tuple[int, int], dict[int, Q]] = {}

    # -- construction ------------------------------------------------------

    def _build(self) -> None:
        if self.alg.family == FAMILY_SL:
            self._build_sl()
        else:
            self._build_ospc()

    def _append(self, name: str, role: str, mat: list[list[Q]], weight: Weight) -> int:
        parity = self._matrix_parity(mat)
        self.basis.append(BasisElement(name, parity, role, _freeze(mat), weight))
        return len(self.basis) - 1

    def _matrix_parity(self, mat: list[list[Q]]) -> int:
        par = None
        for r in range(self.size):
            for c in range(self.size):
                if mat[r][c]:
                    p = (self.index_parity[r] + self.index_parity[c]) % 2
                    if par is None:
                        par = p
                    elif par != p:
                        raise AssertionError("inhomogeneous basis matrix")
        return par or 0

    def _build_sl(self) -> None:
        alg = self.alg
        m, n, N = alg.m, alg.n, self.size
        zero = Weight.zero(alg)
        for i in range(m - 1):
            h = _add(_unit(N, i, i), _unit(N, i + 1, i + 1), -1)
            self.cartan_idx.append(self._append(f"h{i + 1}", "cartan", h, zero))
        h0 = _add(_unit(N, m - 1, m - 1), _unit(N, m, m))
        self.cartan_idx.append(self._append("h0", "cartan", h0, zero))
        for i in range(n - 1):
            h = _add(_unit(N, m + i, m + i), _unit(N, m + i + 1, m + i + 1), -1)
            self.cartan_idx.append(self._append(f"hb{i + 1}", "cartan", h, zero))

        evens = even_positive_roots(alg)
        pairs: list[tuple[int, int]] = []
        for i in range(m):
            for j in range(i + 1, m):
                pairs.append((i, j))
        for i in range(n):
            for j in range(i + 1, n):
                pairs.append((m + i, m + j))
        for (a, b), w in zip(pairs, evens):
            self.even_e_idx.append(
                self._append(f"E({a + 1},{b + 1})", "e", _unit(N, a, b), w)
            )
        odds = odd_positive_roots(alg)
        opairs = odd_root_index_pairs(alg)
        for (i, nu), w in zip(opairs, odds):
            a, b = i - 1, m + nu - 1
            self.odd_e_idx.append(
                self._append(f"E({a + 1},{b + 1})", "e", _unit(N, a, b), w)
            )
        for (a, b), w in zip(pairs, evens):
            self.even_f_idx.append(
                self._append(f"E({b + 1},{a + 1})", "f", _unit(N, b, a), -w)
            )
        for (i, nu), w in zip(opairs, odds):
            a, b = i - 1, m + nu - 1
            self.odd_f_idx.append(
                self._append(f"E({b + 1},{a + 1})", "f", _unit(N, b, a), -w)
            )

    def _build_ospc(self) -> None:
        alg = self.alg
        n, N = alg.n, self.size
        k = n - 1
        zero = Weight.zero(alg)
        # delta_i sits at matrix index i+1, -delta_i at n+i (0-based)
        h1 = _add(
            _add(_unit(N, 0, 0), _unit(N, 1, 1), -1),
            _add(_unit(N, 2, 2), _unit(N, n + 1, n + 1), -1),
        )
        self.cartan_idx.append(self._append("h1", "cartan", h1, zero))
        for i in range(2, n):
            h = _add(
                _add(_unit(N, i, i), _unit(N, i + 1, i + 1), -1),
                _add(_unit(N, n + i, n + i), _unit(N, n + i - 1, n + i - 1), -1),
            )
            self.cartan_idx.append(self._append(f"h{i}", "cartan", h, zero))
        hn = _add(_unit(N, n, n), _unit(N, 2 * n - 1, 2 * n - 1), -1)
        self.cartan_idx.append(self._append(f"h{n}", "cartan", hn, zero))

        evens = even_positive_roots(alg)
        mats_e: list[list[list[Q]]] = []
        mats_f: list[list[list[Q]]] = []
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                mats_e.append(_add(_unit(N, i + 1, j + 1), _unit(N, n + j, n + i), -1))
                mats_f.append(_add(_unit(N, j + 1, i + 1), _unit(N, n + i, n + j), -1))
        for i in range(1, k + 1):
            for j in range(i, k + 1):
                if i == j:
                    mats_e.append(_unit(N, i + 1, n + i))
                    mats_f.append(_unit(N, n + i, i + 1))
                else:
                    mats_e.append(_add(_unit(N, i + 1, n + j), _unit(N, j + 1, n + i)))
                    mats_f.append(_add(_unit(N, n + j, i + 1), _unit(N, n + i, j + 1)))
        for w, me, mf in zip(evens, mats_e, mats_f):
            self.even_e_idx.append(self._append(f"e[{w}]", "e", me, w))
        for w, me, mf in zip(evens, mats_e, mats_f):
            self.even_f_idx.append(self._append(f"f[{w}]", "f", mf, -w))

        odds = odd_positive_roots(alg)
        omats_e: list[list[list[Q]]] = []
        omats_f: list[list[list[Q]]] = []
        for j in range(1, n):  # eps - delta_j
            omats_e.append(_add(_unit(N, 0, j + 1), _unit(N, n + j, 1)))
            omats_f.append(_add(_unit(N, 1, n + j), _unit(N, j + 1, 0), -1))
        for j in range(n - 1, 0, -1):  # eps + delta_j
            omats_e.append(_add(_unit(N, 0, n + j), _unit(N, j + 1, 1), -1))
            omats_f.append(_add(_unit(N, 1, j + 1), _unit(N, n + j, 0)))
        for w, me in zip(odds, omats_e):
            self.odd_e_idx.append(self._append(f"e[{w}]", "e", me, w))
        for w, mf in zip(odds, omats_f):
            self.odd_f_idx.append(self._append(f"f[{w}]", "f", mf, -w))

    # -- queries -----------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    def parity(self, i: int) -> int:
        return self.basis[i].parity

    def decompose(self, mat: Mat) -> dict[int, Q]:
        """Coefficients of a matrix over the frozen basis; raises if the
        matrix lies outside the algebra."""
        flat = [x for row in mat for x in row]
        coeffs = self._solver.coords(flat)
        if coeffs is None:
            raise DomainError("matrix is not in the span of the algebra basis")
        return {i: c for i, c in enumerate(coeffs) if c}

    def bracket(self, i: int, j: int) -> dict[int, Q]:
        """Structure constants: [basis_i, basis_j] over the basis."""
        key = (i, j)
        hit = self._bracket_cache.get(key)
        if hit is not None:
            return hit
        a, b = self.basis[i], self.basis[j]
        mat = supercommutator(a.matrix, a.parity, b.matrix, b.parity)
        out = self.decompose(mat)
        self._bracket_cache[key] = out
        return out

    def cartan_pairing(self, w: Weight, cartan_mat: Mat) -> Q:
        """Evaluate a weight on a diagonal Cartan matrix."""
        if self.alg.family == FAMILY_SL:
            return sum(
                (w.coords[i] * cartan_mat[i][i] for i in range(self.size)), Q(0)
            )
        n = self.alg.n
        val = w.coords[0] * cartan_mat[0][0]
        for i in range(1, n):
            val += w.coords[i] * cartan_mat[i + 1][i + 1]
        return val

    def g0_simple_pairs(self) -> list[tuple[int, int]]:
        """(e index, f index) pairs for the simple roots of the even part.

        For sl: the sl(m) and sl(n) simple roots.  For ospc: the simple roots
        of the sp factor (delta differences plus the long root).
        """
        out: list[tuple[int, int]] = []
        if self.alg.family == FAMILY_SL:
            m, n = self.alg.m, self.alg.n
            evens = even_positive_roots(self.alg)
            for pos, w in enumerate(evens):
                e = w.even_block
                o = w.odd_block
                simple = False
                for i in range(m - 1):
                    if e[i] == 1 and e[i + 1] == -1 and sum(abs(x) for x in e) == 2:
                        simple = True
                for i in range(n - 1):
                    if o[i] == 1 and o[i + 1] == -1 and sum(abs(x) for x in o) == 2:
                        simple = True
                if simple:
                    out.append((self.even_e_idx[pos], self.even_f_idx[pos]))
            return out
        k = self.alg.n - 1
        evens = even_positive_roots(self.alg)
        for pos, w in enumerate(evens):
            d = w.odd_block
            nz = [(i, x) for i, x in enumerate(d) if x]
            if len(nz) == 2 and nz[1][0] == nz[0][0] + 1 and nz[0][1] == 1 and nz[1][1] == -1:
                out.append((self.even_e_idx[pos], self.even_f_idx[pos]))
            if len(nz) == 1 and nz[0][0] == k - 1 and nz[0][1] == 2:
                out.append((self.even_e_idx[pos], self.even_f_idx[pos]))
        return out

    def h_of_odd_root(self, pos: int) -> Mat:
        """[e_alpha, f_alpha] for the pos-th odd positive root."""
        e = self.basis[self.odd_e_idx[pos]]
        f = self.basis[self.odd_f_idx[pos]]
        return supercommutator(e.matrix, 1, f.matrix, 1)


@lru_cache(maxsize=None)
def build_root_system(alg: AlgebraSpec) -> RootSystem:
    return RootSystem(alg)


def check_super_jacobi(rs: RootSystem, triples=None) -> bool:
    """(-1)^(px pz) [x,[y,z]] + cyclic == 0 over the given basis triples
    (all of them when triples is None)."""
    idx = range(rs.dim)
    if triples is None:
        triples = product(idx, idx, idx)
    for x, y, z in triples:
        acc: dict[int, Q] = {}
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            pa, pc = rs.parity(a), rs.parity(c)
            sign = -1 if (pa and pc) else 1
            inner = rs.bracket(b, c)
            for k, v in inner.items():
                for k2, v2 in rs.bracket(a, k).items():
                    acc[k2] = acc.get(k2, Q(0)) + sign * v * v2
        if any(acc.values()):
            return False
    return True
