"""Straightening in the universal enveloping algebra, just far enough to
exhibit the nonvanishing witness

    prod_{a in odd positive roots} (ad f_a)  applied to  prod_a e_a,

whose leading normal-ordered term is the commuting product of the Cartan
elements [e_a, f_a].  Monomials are tuples of basis indices in the frozen
basis order (Cartans, then raising, then lowering vectors); the normal form
has non-decreasing indices, with a repeated odd index collapsing through
x^2 = [x, x]/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from ..errors import ResourceError
from ..rootsystem import RootSystem, build_root_system
from ..weights import AlgebraSpec

Mono = tuple[int, ...]


def _accumulate(dst: dict[Mono, Q], src: dict[Mono, Q], c: Q) -> None:
    for mono, v in src.items():
        val = dst.get(mono, Q(0)) + c * v
        if val:
            dst[mono] = val
        else:
            dst.pop(mono, None)


@dataclass(frozen=True)
class PbwElement:
    """An exact element of U(g) in normal-ordered monomials."""

    alg: AlgebraSpec
    terms: dict[Mono, Q]

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    def component(self, degree: int, cartan_only: bool = False) -> dict[Mono, Q]:
        rs = build_root_system(self.alg)
        out = {}
        for mono, c in self.terms.items():
            if len(mono) != degree:
                continue
            if cartan_only and any(rs.basis[i].role != "cartan" for i in mono):
                continue
            out[mono] = c
        return out

    def render(self) -> str:
        rs = build_root_system(self.alg)
        if not self.terms:
            return "0"
        bits = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            name = "*".join(rs.basis[i].name for i in mono) if mono else "1"
            bits.append(f"({c})·{name}" if c != 1 else name)
        return " + ".join(bits)


class _Straightener:
    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.memo: dict[Mono, dict[Mono, Q]] = {}

    def normalize(self, mono: Mono) -> dict[Mono, Q]:
        hit = self.memo.get(mono)
        if hit is not None:
            return hit
        rs = self.rs
        out: dict[Mono, Q] | None = None
        for k in range(len(mono) - 1):
            a, b = mono[k], mono[k + 1]
            if a < b or (a == b and rs.parity(a) == 0):
                continue
            prefix, suffix = mono[:k], mono[k + 2 :]
            acc: dict[Mono, Q] = {}
            if a == b:  # odd square: x x = [x, x]/2
                for j, c in rs.bracket(a, a).items():
                    _accumulate(acc, self.normalize(prefix + (j,) + suffix), c / 2)
            else:
                sign = Q(-1) if rs.parity(a) and rs.parity(b) else Q(1)
                _accumulate(acc, self.normalize(prefix + (b, a) + suffix), sign)
                for j, c in rs.bracket(a, b).items():
                    _accumulate(acc, self.normalize(prefix + (j,) + suffix), c)
            out = acc
            break
        if out is None:
            out = {mono: Q(1)}
        self.memo[mono] = out
        return out

    def ad(self, x: int, elem: dict[Mono, Q]) -> dict[Mono, Q]:
        """ad x (u) = x u - (-1)^{[x][u]} u x on homogeneous monomials."""
        px = self.rs.parity(x)
        out: dict[Mono, Q] = {}
        for mono, c in elem.items():
            pm = sum(self.rs.parity(i) for i in mono) % 2
            _accumulate(out, self.normalize((x,) + mono), c)
            sign = Q(-1) if px and pm else Q(1)
            _accumulate(out, self.normalize(mono + (x,)), -sign * c)
        return out


def pbw_ad_witness(alg: AlgebraSpec, max_odd: int = 6) -> PbwElement:
    """The straightened element prod(ad f_a) prod(e_a), first factor
    outermost; asserted nonzero with leading Cartan term +-prod [e_a, f_a]."""
    rs = build_root_system(alg)
    d1 = len(rs.odd_e_idx)
    if d1 > max_odd:
        raise ResourceError(
            f"straightening with {d1} odd roots exceeds the configured bound "
            f"{max_odd}; pass a larger max_odd to force it"
        )
    st = _Straightener(rs)
    cur = st.normalize(tuple(rs.odd_e_idx))
    for pos in reversed(range(d1)):
        cur = st.ad(rs.odd_f_idx[pos], cur)

    assert cur, "ad-product witness vanished: structure constant bug"
    assert all(len(m) <= 2 * d1 for m in cur), "straightening raised the degree"

    lead = {
        m: c
        for m, c in cur.items()
        if len(m) == d1 and all(rs.basis[i].role == "cartan" for i in m)
    }
    expected: dict[Mono, Q] = {(): Q(1)}
    for pos in range(d1):
        h = rs.bracket(rs.odd_e_idx[pos], rs.odd_f_idx[pos])
        nxt: dict[Mono, Q] = {}
        for mono, c in expected.items():
            for j, cj in h.items():
                key = tuple(sorted(mono + (j,)))
                val = nxt.get(key, Q(0)) + c * cj
                if val:
                    nxt[key] = val
                else:
                    nxt.pop(key, None)
        expected = nxt
    negated = {m: -c for m, c in expected.items()}
    assert lead in (expected, negated), (
        "leading term is not +-prod h_alpha: straightening bug"
    )
    return PbwElement(alg, cur)
