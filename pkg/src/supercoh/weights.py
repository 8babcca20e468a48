"""Weight arithmetic for the two algebra families.

Weights are tuples of exact rationals in the eps/delta coordinate system.
For family ``sl`` a weight reads (c_1,..,c_m | d_1,..,d_n); every weight this
module constructs has plain trace sum(c) + sum(d) == 0, which is the
normalization that makes Dynkin labels invertible.  For family ``ospc`` a
weight reads (c_0 | c_1,..,c_{n-1}) with c_0 the coefficient of eps and c_i
the coefficient of delta_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import DomainError, ParseError, RangeError

Q = Fraction

FAMILY_SL = "sl"
FAMILY_OSPC = "ospc"

SPECIAL_KINDS = (
    "mu_ij",
    "mu_j",
    "mu_j_plus",
    "mu_j_minus",
    "eta1",
    "eta2",
    "two_rho1",
    "minus_amin",
    "minus_2amin",
    "two_amax",
    "rho0",
    "rho1",
)


@dataclass(frozen=True, order=True)
class AlgebraSpec:
    """Which algebra we are working in: sl(m|n) with 1 <= n <= m, or
    osp(2|2n-2) ("ospc") with n >= 2 (m is fixed to 2 there)."""

    family: str
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.family == FAMILY_SL:
            if not 1 <= self.n <= self.m:
                raise DomainError(
                    f"sl({self.m}|{self.n}) is outside the supported range "
                    "1 <= n <= m; swap the two ranks"
                )
        elif self.family == FAMILY_OSPC:
            if self.m != 2:
                raise DomainError("family 'ospc' fixes m = 2")
            if self.n < 2:
                raise DomainError("family 'ospc' needs n >= 2")
        else:
            raise DomainError(f"unknown family {self.family!r}")

    @property
    def coord_len(self) -> int:
        return self.m + self.n if self.family == FAMILY_SL else self.n

    @property
    def num_odd_positive(self) -> int:
        """Size of the odd positive root set."""
        return self.m * self.n if self.family == FAMILY_SL else 2 * (self.n - 1)

    def __str__(self) -> str:
        if self.family == FAMILY_SL:
            return f"sl({self.m}|{self.n})"
        return f"osp(2|{2 * self.n - 2})"


def _q(value) -> Q:
    if isinstance(value, Q):
        return value
    if isinstance(value, int):
        return Q(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class Weight:
    """An exact weight attached to an AlgebraSpec."""

    alg: AlgebraSpec
    coords: tuple[Q, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.alg.coord_len:
            raise DomainError(
                f"weight needs {self.alg.coord_len} coordinates for {self.alg}, "
                f"got {len(self.coords)}"
            )
        object.__setattr__(self, "coords", tuple(_q(c) for c in self.coords))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, alg: AlgebraSpec) -> "Weight":
        return cls(alg, (Q(0),) * alg.coord_len)

    @classmethod
    def parse(cls, alg: AlgebraSpec, text: str) -> "Weight":
        """Parse ``c1,..,cm|d1,..,dn`` (sl) or ``c0|c1,..,c_{n-1}`` (ospc)."""
        parts = text.split("|")
        if len(parts) != 2:
            raise ParseError(f"weight {text!r}: expected exactly one '|'")
        left, right = (_parse_block(p, text) for p in parts)
        if alg.family == FAMILY_SL:
            if len(left) != alg.m or len(right) != alg.n:
                raise ParseError(
                    f"weight {text!r}: expected {alg.m}|{alg.n} coordinates, "
                    f"got {len(left)}|{len(right)}"
                )
        else:
            if len(left) != 1 or len(right) != alg.n - 1:
                raise ParseError(
                    f"weight {text!r}: expected 1|{alg.n - 1} coordinates for "
                    f"{alg}, got {len(left)}|{len(right)}"
                )
        return cls(alg, tuple(left + right))

    # -- block views -------------------------------------------------------

    @property
    def even_block(self) -> tuple[Q, ...]:
        if self.alg.family == FAMILY_SL:
            return self.coords[: self.alg.m]
        return self.coords[:1]

    @property
    def odd_block(self) -> tuple[Q, ...]:
        if self.alg.family == FAMILY_SL:
            return self.coords[self.alg.m :]
        return self.coords[1:]

    # -- arithmetic --------------------------------------------------------

    def _like(self, coords: Iterable[Q]) -> "Weight":
        return Weight(self.alg, tuple(coords))

    def __add__(self, other: "Weight") -> "Weight":
        self._check_same(other)
        return self._like(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_same(other)
        return self._like(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "Weight":
        return self._like(-a for a in self.coords)

    def __mul__(self, scalar) -> "Weight":
        s = _q(scalar)
        return self._like(s * a for a in self.coords)

    __rmul__ = __mul__

    def _check_same(self, other: "Weight") -> None:
        if self.alg != other.alg:
            raise DomainError(f"mixing weights of {self.alg} and {other.alg}")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    # -- structure ---------------------------------------------------------

    def is_integral(self) -> bool:
        """True when every Dynkin label is an integer."""
        evens, a0, odds = (
            self.dynkin_labels() if self.alg.family == FAMILY_SL else self._ospc_labels3()
        )
        return all(x.denominator == 1 for x in (*evens, a0, *odds))

    def is_dominant(self) -> bool:
        """Block-wise dominance; no condition couples the two blocks."""
        if self.alg.family == FAMILY_SL:
            e, o = self.even_block, self.odd_block
            return all(e[i] >= e[i + 1] for i in range(len(e) - 1)) and all(
                o[i] >= o[i + 1] for i in range(len(o) - 1)
            )
        d = self.odd_block
        return (
            all(d[i] >= d[i + 1] for i in range(len(d) - 1))
            and (len(d) == 0 or d[-1] >= 0)
        )

    def level(self) -> Q:
        """Eigenvalue of the grading element: sum of the even block (sl) or
        the eps coefficient (ospc)."""
        if self.alg.family == FAMILY_SL:
            return sum(self.even_block, Q(0))
        return self.coords[0]

    def reverse(self) -> "Weight":
        """Reverse each block in place (the `R` involution); sl only."""
        if self.alg.family != FAMILY_SL:
            raise DomainError("reverse is defined for the sl family only")
        return self._like(tuple(reversed(self.even_block)) + tuple(reversed(self.odd_block)))

    def supertrace(self) -> Q:
        if self.alg.family != FAMILY_SL:
            raise DomainError("supertrace is defined for the sl family only")
        return sum(self.even_block, Q(0)) - sum(self.odd_block, Q(0))

    # -- Dynkin labels -----------------------------------------------------

    def dynkin_labels(self):
        """Return (even labels, a0, odd labels) for sl; for ospc return the
        flat tuple (a1, .., an)."""
        if self.alg.family == FAMILY_SL:
            e, o = self.even_block, self.odd_block
            evens = tuple(e[i] - e[i + 1] for i in range(len(e) - 1))
            odds = tuple(o[i] - o[i + 1] for i in range(len(o) - 1))
            return evens, e[-1] + o[0], odds
        evens, a0, odds = self._ospc_labels3()
        return (a0, *odds)

    def _ospc_labels3(self):
        # a1 = c0 + c1; middle labels are consecutive delta differences;
        # an = c_{n-1}.  Packed as ((), a1, rest) so is_integral can share code.
        c = self.coords
        n = self.alg.n
        a1 = c[0] + c[1]
        rest = tuple(c[i] - c[i + 1] for i in range(1, n - 1)) + (c[n - 1],)
        return (), a1, rest

    @classmethod
    def from_dynkin(cls, alg: AlgebraSpec, labels) -> "Weight":
        """Invert dynkin_labels.

        For sl the labels only determine the weight up to the trace direction
        (1,..,1|-1,..,-1); we pick the representative with plain trace zero.
        When m == n that direction is traceless, so the representative exists
        only if a particular solution already has trace zero — otherwise this
        raises DomainError.
        """
        if alg.family == FAMILY_SL:
            evens, a0, odds = labels
            evens = tuple(_q(x) for x in evens)
            odds = tuple(_q(x) for x in odds)
            a0 = _q(a0)
            if len(evens) != alg.m - 1 or len(odds) != alg.n - 1:
                raise ParseError(
                    f"need {alg.m - 1};1;{alg.n - 1} labels for {alg}, "
                    f"got {len(evens)};1;{len(odds)}"
                )
            # particular solution with lambda_m = 0
            e = [Q(0)] * alg.m
            for i in range(alg.m - 2, -1, -1):
                e[i] = e[i + 1] + evens[i]
            o = [Q(0)] * alg.n
            o[0] = a0 - e[-1]
            for i in range(1, alg.n):
                o[i] = o[i - 1] - odds[i - 1]
            trace = sum(e) + sum(o)
            if alg.m == alg.n:
                if trace != 0:
                    raise DomainError(
                        "these labels admit no trace-zero weight when m == n"
                    )
                return cls(alg, tuple(e + o))
            t = -trace / (alg.m - alg.n)
            coords = [x + t for x in e] + [x - t for x in o]
            return cls(alg, tuple(coords))
        flat = tuple(_q(x) for x in labels)
        if len(flat) != alg.n:
            raise ParseError(f"need {alg.n} labels for {alg}, got {len(flat)}")
        c = [Q(0)] * alg.n
        c[alg.n - 1] = flat[-1]
        for i in range(alg.n - 2, 0, -1):
            c[i] = flat[i] + c[i + 1]
        c[0] = flat[0] - c[1] if alg.n >= 2 else flat[0]
        return cls(alg, tuple(c))

    @classmethod
    def parse_dynkin(cls, alg: AlgebraSpec, text: str) -> "Weight":
        """Parse ``[a1,..;a0;b1,..]`` (sl) or ``[a1;a2,..,an]`` (ospc)."""
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ParseError(f"Dynkin labels {text!r}: expected [...]")
        parts = body[1:-1].split(";")
        if alg.family == FAMILY_SL:
            if len(parts) != 3:
                raise ParseError(f"Dynkin labels {text!r}: expected two ';'")
            evens = _parse_block(parts[0], text, allow_empty=True)
            a0s = _parse_block(parts[1], text)
            odds = _parse_block(parts[2], text, allow_empty=True)
            if len(a0s) != 1:
                raise ParseError(f"Dynkin labels {text!r}: middle part is a single label")
            return cls.from_dynkin(alg, (evens, a0s[0], odds))
        if len(parts) != 2:
            raise ParseError(f"Dynkin labels {text!r}: expected one ';' for {alg}")
        first = _parse_block(parts[0], text)
        rest = _parse_block(parts[1], text, allow_empty=alg.n == 1)
        if len(first) != 1:
            raise ParseError(f"Dynkin labels {text!r}: first part is a single label")
        return cls.from_dynkin(alg, tuple(first + rest))

    def dynkin_text(self) -> str:
        if self.alg.family == FAMILY_SL:
            evens, a0, odds = self.dynkin_labels()
            return "[{};{};{}]".format(
                ",".join(map(str, evens)), a0, ",".join(map(str, odds))
            )
        flat = self.dynkin_labels()
        return "[{};{}]".format(flat[0], ",".join(map(str, flat[1:])))

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if self.alg.family == FAMILY_SL:
            e, o = self.even_block, self.odd_block
        else:
            e, o = self.coords[:1], self.coords[1:]
        return "{}|{}".format(",".join(map(str, e)), ",".join(map(str, o)))

    def sort_key(self):
        return (self.level(), self.coords)


def _parse_block(part: str, whole: str, allow_empty: bool = False) -> list[Q]:
    part = part.strip()
    if part == "":
        if allow_empty:
            return []
        raise ParseError(f"{whole!r}: empty coordinate block")
    out = []
    for tok in part.split(","):
        tok = tok.strip()
        try:
            out.append(Q(tok))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"{whole!r}: bad rational {tok!r}") from exc
    return out


def bilinear_form(a: Weight, b: Weight) -> Q:
    """The invariant form: (eps_i, eps_j) = delta_ij, (delta_i, delta_j) =
    -delta_ij (odd coordinates contribute with a minus sign)."""
    a._check_same(b)
    e = sum(x * y for x, y in zip(a.even_block, b.even_block))
    o = sum(x * y for x, y in zip(a.odd_block, b.odd_block))
    return e - o


# ---------------------------------------------------------------------------
# positive roots, expressed as weights
# ---------------------------------------------------------------------------


def _sl_unit(alg: AlgebraSpec, idx: int) -> list[Q]:
    v = [Q(0)] * alg.coord_len
    v[idx] = Q(1)
    return v


def even_positive_roots(alg: AlgebraSpec) -> list[Weight]:
    """Positive even roots in the frozen order used everywhere else."""
    out: list[Weight] = []
    if alg.family == FAMILY_SL:
        m, n = alg.m, alg.n
        for i in range(m):
            for j in range(i + 1, m):
                v = _sl_unit(alg, i)
                v[j] -= 1
                out.append(Weight(alg, tuple(v)))
        for i in range(n):
            for j in range(i + 1, n):
                v = _sl_unit(alg, m + i)
                v[m + j] -= 1
                out.append(Weight(alg, tuple(v)))
        return out
    k = alg.n - 1  # rank of the sp factor
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            v = _sl_unit(alg, i)
            v[j] -= 1
            out.append(Weight(alg, tuple(v)))
    for i in range(1, k + 1):
        for j in range(i, k + 1):
            v = _sl_unit(alg, i)
            v[j] += 1
            out.append(Weight(alg, tuple(v)))
    return out


def odd_positive_roots(alg: AlgebraSpec) -> list[Weight]:
    """Odd positive roots in their total order, smallest first.

    For sl the order is by (nu - i, -i) on alpha_{i,nubar}; the minimum is
    alpha_{m,1bar} and the maximum alpha_{1,nbar}.  For ospc it is by height:
    eps-delta_1 < .. < eps-delta_{n-1} < eps+delta_{n-1} < .. < eps+delta_1.
    """
    out: list[Weight] = []
    if alg.family == FAMILY_SL:
        for i, nu in odd_root_index_pairs(alg):
            v = _sl_unit(alg, i - 1)
            v[alg.m + nu - 1] -= 1
            out.append(Weight(alg, tuple(v)))
        return out
    for j in range(1, alg.n):
        v = _sl_unit(alg, 0)
        v[j] -= 1
        out.append(Weight(alg, tuple(v)))
    for j in range(alg.n - 1, 0, -1):
        v = _sl_unit(alg, 0)
        v[j] += 1
        out.append(Weight(alg, tuple(v)))
    return out


def odd_root_index_pairs(alg: AlgebraSpec) -> list[tuple[int, int]]:
    """The (i, nu) index pairs of alpha_{i,nubar} in the total order (sl)."""
    if alg.family != FAMILY_SL:
        raise DomainError("odd root index pairs are an sl notion")
    pairs = [(i, nu) for i in range(1, alg.m + 1) for nu in range(1, alg.n + 1)]
    pairs.sort(key=lambda p: (p[1] - p[0], -p[0]))
    return pairs


def odd_root(alg: AlgebraSpec, i: int, nu: int) -> Weight:
    """alpha_{i,nubar} = eps_i - delta_nu (sl family, 1-based indices)."""
    if alg.family != FAMILY_SL:
        raise DomainError("odd_root(i, nu) is an sl notion")
    if not (1 <= i <= alg.m and 1 <= nu <= alg.n):
        raise RangeError(f"alpha_{{{i},{nu}bar}} is outside the {alg} grid")
    v = _sl_unit(alg, i - 1)
    v[alg.m + nu - 1] -= 1
    return Weight(alg, tuple(v))


def alpha_min(alg: AlgebraSpec) -> Weight:
    return odd_positive_roots(alg)[0]


def alpha_max(alg: AlgebraSpec) -> Weight:
    return odd_positive_roots(alg)[-1]


# ---------------------------------------------------------------------------
# the named special weights
# ---------------------------------------------------------------------------


def special_weight(alg: AlgebraSpec, kind: str, i: int | None = None, j: int | None = None) -> Weight:
    """Build one of the named weights.  Index windows are enforced strictly;
    asking outside them raises RangeError."""
    if kind not in SPECIAL_KINDS:
        raise DomainError(f"unknown special weight kind {kind!r}")
    if alg.family == FAMILY_OSPC:
        return _special_ospc(alg, kind)
    m, n = alg.m, alg.n
    if kind == "mu_ij":
        if i is None or j is None:
            raise DomainError("mu_ij needs both indices")
        return _mu_ij(alg, i, j)
    if kind in ("mu_j", "mu_j_plus", "mu_j_minus"):
        if j is None:
            raise DomainError(f"{kind} needs the index j")
        base = _mu_ij(alg, 1, j)
        if kind == "mu_j":
            return base
        amax = alpha_max(alg)
        return base + amax if kind == "mu_j_plus" else base - amax
    if kind in ("eta1", "eta2"):
        if n < 2:
            raise RangeError(f"{kind} needs n >= 2")
        v = [Q(0)] * (m + n)
        if kind == "eta1":
            v[0] = v[1] = Q(1)
            v[-1] = v[-2] = Q(-1)
        else:
            v[m - 1] = v[m - 2] = Q(-1)
            v[m] = v[m + 1] = Q(1)
        return Weight(alg, tuple(v))
    if kind == "two_rho1":
        return Weight(alg, (Q(n),) * m + (Q(-m),) * n)
    if kind == "rho1":
        return Weight(alg, (Q(n, 2),) * m + (Q(-m, 2),) * n)
    if kind == "rho0":
        e = [Q(m - 1 - 2 * t, 2) for t in range(m)]
        o = [Q(n - 1 - 2 * t, 2) for t in range(n)]
        return Weight(alg, tuple(e + o))
    if kind == "minus_amin":
        return -alpha_min(alg)
    if kind == "minus_2amin":
        return -2 * alpha_min(alg)
    if kind == "two_amax":
        return 2 * alpha_max(alg)
    raise AssertionError(kind)


def _mu_ij(alg: AlgebraSpec, i: int, j: int) -> Weight:
    m, n = alg.m, alg.n
    if not 1 <= i <= n:
        raise RangeError(f"mu_ij: need 1 <= i <= {n}, got i = {i}")
    if not 0 <= j <= n - i:
        raise RangeError(f"mu_ij: need 0 <= j <= {n - i} for i = {i}, got j = {j}")
    even = [Q(0)] * (i - 1) + [Q(j + 1)] + [Q(1)] * (m - n + j) + [Q(0)] * (n - i - j)
    odd = [Q(0)] * (n - i - j) + [Q(-1)] * j + [Q(-j - 1 - m + n)] + [Q(0)] * (i - 1)
    return Weight(alg, tuple(even + odd))


def _special_ospc(alg: AlgebraSpec, kind: str) -> Weight:
    n = alg.n
    zero = [Q(0)] * (n - 1)
    if kind == "two_rho1":
        return Weight(alg, (Q(2 * n - 2), *zero))
    if kind == "rho1":
        return Weight(alg, (Q(n - 1), *zero))
    if kind == "rho0":
        return Weight(alg, (Q(0), *[Q(n - 1 - t) for t in range(n - 1)]))
    if kind == "minus_amin":
        return -alpha_min(alg)
    if kind == "minus_2amin":
        return -2 * alpha_min(alg)
    if kind == "two_amax":
        return 2 * alpha_max(alg)
    raise DomainError(f"special weight {kind!r} is not defined for {alg}")


# ---------------------------------------------------------------------------
# subset representations by distinct odd positive roots
# ---------------------------------------------------------------------------


def odd_subset_representations(alg: AlgebraSpec, target: Weight) -> list[tuple[int, ...]]:
    """All subsets S of the odd positive roots with sum(S) == target.

    Returned as tuples of indices into odd_positive_roots(alg), in
    lexicographic order.  Every odd positive root has grading level +1, so a
    subset's size is forced to equal target.level(); this powers the pruning.
    """
    roots = odd_positive_roots(alg)
    coords = [r.coords for r in roots]
    k = len(roots)
    dim = alg.coord_len
    # suffix envelopes: the least/greatest achievable remaining contribution
    lo = [[Q(0)] * dim for _ in range(k + 1)]
    hi = [[Q(0)] * dim for _ in range(k + 1)]
    for idx in range(k - 1, -1, -1):
        for c in range(dim):
            x = coords[idx][c]
            lo[idx][c] = lo[idx + 1][c] + min(x, Q(0))
            hi[idx][c] = hi[idx + 1][c] + max(x, Q(0))

    need = target.level()
    if need.denominator != 1 or need < 0 or need > k:
        return []

    out: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def rec(idx: int, remaining: tuple[Q, ...], left: int) -> None:
        if left == 0:
            if all(c == 0 for c in remaining):
                out.append(tuple(chosen))
            return
        if idx >= k or k - idx < left:
            return
        for c in range(dim):
            if not lo[idx][c] <= remaining[c] <= hi[idx][c]:
                return
        chosen.append(idx)
        rec(idx + 1, tuple(a - b for a, b in zip(remaining, coords[idx])), left - 1)
        chosen.pop()
        rec(idx + 1, remaining, left)

    rec(0, target.coords, int(need))
    return out
