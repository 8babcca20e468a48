"""Atypicality combinatorics for sl(m|n).

Everything in here is exact integer bookkeeping on the m-by-n atypicality
matrix: locating atypical roots, classifying their pairwise n/q/c relations,
growing the east/north chains, and from those the maximal weight Lambda_mu,
the position set P_mu, permissibility, duality, and the two Young-diagram
multiplicities used by the classifiers.

Positions are 1-indexed (row i from the top, column eta from the left),
matching the printed matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, RangeError
from .weights import (
    FAMILY_SL,
    AlgebraSpec,
    Weight,
    alpha_max,
    alpha_min,
    odd_root,
    odd_root_index_pairs,
    special_weight,
)

Q = Fraction

Position = tuple[int, int]


def _require_sl(mu: Weight) -> None:
    if mu.alg.family != FAMILY_SL:
        raise DomainError("atypicality combinatorics live in the sl family")


def _require_integral(mu: Weight) -> None:
    if not mu.is_integral():
        raise DomainError(f"weight {mu} is not integral")


def _require_dominant(mu: Weight) -> None:
    if not mu.is_dominant():
        raise DomainError(f"weight {mu} is not dominant")


def _position_key(pos: Position) -> tuple[int, int]:
    i, eta = pos
    return (eta - i, -i)


# ---------------------------------------------------------------------------
# the matrix and its zeros
# ---------------------------------------------------------------------------


def atypicality_matrix(mu: Weight) -> list[list[int]]:
    """A(mu)_{i,eta} = mu_i + mu_{etabar} + m - i + 1 - eta, 1-based."""
    _require_sl(mu)
    _require_integral(mu)
    m, n = mu.alg.m, mu.alg.n
    even, odd = mu.even_block, mu.odd_block
    out: list[list[int]] = []
    for i in range(m):
        row = []
        for h in range(n):
            entry = even[i] + odd[h] + (m - i - h - 1)
            if entry.denominator != 1:
                raise DomainError(
                    f"weight {mu} gives the non-integer matrix entry {entry} "
                    f"at ({i + 1},{h + 1})"
                )
            row.append(int(entry))
        out.append(row)
    return out


def atypical_roots(mu: Weight) -> list[Position]:
    """Zero positions of A(mu), in the total odd-root order."""
    a = atypicality_matrix(mu)
    positions = [
        (i, eta)
        for i in range(1, mu.alg.m + 1)
        for eta in range(1, mu.alg.n + 1)
        if a[i - 1][eta - 1] == 0
    ]
    positions.sort(key=_position_key)
    return positions


def degree_of_atypicality(mu: Weight) -> int:
    return len(atypical_roots(mu))


# ---------------------------------------------------------------------------
# n/q/c relations
# ---------------------------------------------------------------------------


def nqc_type(mu: Weight) -> list[list[str]]:
    """Pairwise relation triangle: row t (t = 2..r) holds the relation of
    gamma_s to gamma_t for s = 1..t-1.

    With gamma_s at (b_s, c_s): x_st = A(mu)_{b_t, c_s} and the step count
    h_st = (b_s - b_t) + (c_t - c_s) + 1 (both endpoints included); the pair
    is n/q/c-related according to x_st >, =, < h_st - 1.
    """
    _require_sl(mu)
    _require_dominant(mu)
    a = atypicality_matrix(mu)
    gammas = atypical_roots(mu)
    triangle: list[list[str]] = []
    for t in range(1, len(gammas)):
        bt, ct = gammas[t]
        row = []
        for s in range(t):
            bs, cs = gammas[s]
            x = a[bt - 1][cs - 1]
            h = (bs - bt) + (ct - cs) + 1
            row.append("n" if x > h - 1 else "q" if x == h - 1 else "c")
        triangle.append(row)
    return triangle


# ---------------------------------------------------------------------------
# east / north chains
# ---------------------------------------------------------------------------


def ne_chains(mu: Weight) -> tuple[list[list[Position]], list[list[Position]], list[Position]]:
    """(east_chains, north_chains, ne_union), one chain per atypical root.

    East chain: from (i, eta) step to (i - a_{etabar}, eta + 1) while the
    column stays in range, the row stays >= 1 and the entry is negative.
    North chain: step to (i - 1, eta + a_{i-1}) while the row stays >= 1,
    the column in range and the entry is positive.  a_* are the Dynkin
    labels of mu.
    """
    _require_sl(mu)
    _require_dominant(mu)
    a = atypicality_matrix(mu)
    m, n = mu.alg.m, mu.alg.n
    even_labels, _, odd_labels = mu.dynkin_labels()

    east: list[list[Position]] = []
    north: list[list[Position]] = []
    for start in atypical_roots(mu):
        chain = [start]
        i, eta = start
        while eta + 1 <= n:
            i2 = i - int(odd_labels[eta - 1])
            eta2 = eta + 1
            if i2 < 1 or a[i2 - 1][eta2 - 1] >= 0:
                break
            chain.append((i2, eta2))
            i, eta = i2, eta2
        east.append(chain)

        chain = [start]
        i, eta = start
        while i - 1 >= 1:
            i2 = i - 1
            eta2 = eta + int(even_labels[i2 - 1])
            if eta2 > n or a[i2 - 1][eta2 - 1] <= 0:
                break
            chain.append((i2, eta2))
            i, eta = i2, eta2
        north.append(chain)

    union = sorted(
        {pos for chain in east for pos in chain}
        | {pos for chain in north for pos in chain},
        key=_position_key,
    )
    return east, north, union


def capital_lambda(mu: Weight) -> Weight:
    """Lambda_mu = mu plus the sum of the odd roots at the NE positions."""
    _, _, union = ne_chains(mu)
    total = mu
    for i, eta in union:
        total = total + odd_root(mu.alg, i, eta)
    return total


# ---------------------------------------------------------------------------
# P_mu
# ---------------------------------------------------------------------------


def p_mu(mu: Weight) -> list[Position]:
    """P_mu = { (i, nu) : nu > mu_i - mu_m  and  i <= m - (mu_1bar - mu_nubar) },
    in the total odd-root order.

    (The two exclusion conditions are the strict complements of the bands
    that (NumP_mu) counts; the cardinality identity is asserted whenever the
    two bands do not overlap.)
    """
    _require_sl(mu)
    _require_integral(mu)
    _require_dominant(mu)
    m, n = mu.alg.m, mu.alg.n
    even, odd = mu.even_block, mu.odd_block
    kept: list[Position] = []
    band1: set[Position] = set()
    band2: set[Position] = set()
    for i in range(1, m + 1):
        for nu in range(1, n + 1):
            in1 = nu <= even[i - 1] - even[m - 1]
            in2 = i > m - (odd[0] - odd[nu - 1])
            if in1:
                band1.add((i, nu))
            if in2:
                band2.add((i, nu))
            if not in1 and not in2:
                kept.append((i, nu))
    if not band1 & band2:
        assert len(kept) == m * n - len(band1) - len(band2)
    kept.sort(key=_position_key)
    return kept


def num_p_formula(mu: Weight) -> int:
    """First closed form for |P_mu|: mn - sum_i (mu_i - mu_m) - sum_nu
    (mu_1bar - mu_nubar)."""
    _require_sl(mu)
    m, n = mu.alg.m, mu.alg.n
    even, odd = mu.even_block, mu.odd_block
    total = Q(m * n)
    total -= sum((even[i] - even[m - 1] for i in range(m)), Q(0))
    total -= sum((odd[0] - odd[nu] for nu in range(n)), Q(0))
    if total.denominator != 1:
        raise DomainError(f"weight {mu} is not integral")
    return int(total)


# ---------------------------------------------------------------------------
# permissibility
# ---------------------------------------------------------------------------


def mu_form_weight(alg: AlgebraSpec, k: int, js: tuple[int, ...]) -> Weight:
    """The staircase weight with parameters (k, j_0..j_k):

    even block  (mu_1..mu_k, k^(m-n+j_k), (k-1)^(j_{k-1}), .., 1^(j_1), 0^(j_0))
    odd block   (0^(j_0), (-1)^(j_1), .., (-k)^(j_k), -mu_k-(m-n), .., -mu_1-(m-n))

    with mu_s = k + j_s + j_{s+1} + .. + j_k.
    """
    if alg.family != FAMILY_SL:
        raise DomainError("staircase weights live in the sl family")
    m, n = alg.m, alg.n
    if k < 0 or len(js) != k + 1 or any(j < 0 for j in js):
        raise DomainError(f"need k+1 nonnegative part sizes, got k={k}, js={js}")
    if sum(js) != n - k:
        raise DomainError(f"part sizes must sum to n - k = {n - k}, got {sum(js)}")
    suffix = [0] * (k + 2)
    for t in range(k, -1, -1):
        suffix[t] = suffix[t + 1] + js[t]
    mus = [k + suffix[s] for s in range(1, k + 1)]  # mu_1 .. mu_k
    even: list[int] = list(mus) + [k] * (m - n + js[k])
    for t in range(k - 1, 0, -1):
        even += [t] * js[t]
    if k > 0:  # for k = 0 the j_k block above already is the 0^(j_0) block
        even += [0] * js[0]
    odd: list[int] = [0] * js[0]
    for t in range(1, k + 1):
        odd += [-t] * js[t]
    odd += [-mu_s - (m - n) for mu_s in reversed(mus)]
    return Weight(alg, tuple(Q(x) for x in even + odd))


def permissible_parameters(mu: Weight) -> tuple[int, tuple[int, ...]] | None:
    """Recover (k, j_0..j_k) when mu has the permissible staircase shape with
    1 <= k <= n/2 (k = 0 for the zero weight); None otherwise."""
    _require_sl(mu)
    _require_integral(mu)
    _require_dominant(mu)
    n = mu.alg.n
    if mu.is_zero():
        return 0, (n,)
    even = mu.even_block
    for k in range(1, n // 2 + 1):
        mus = even[:k]
        if any(x.denominator != 1 for x in mus):
            continue
        mus = [int(x) for x in mus]
        js = [0] * (k + 1)
        js[k] = mus[k - 1] - k
        for s in range(1, k):
            js[s] = mus[s - 1] - mus[s]
        body = sum(js[1:])
        js[0] = (n - k) - body
        if any(j < 0 for j in js):
            continue
        try:
            candidate = mu_form_weight(mu.alg, k, tuple(js))
        except DomainError:
            continue
        if candidate.coords != mu.coords:
            continue
        # (mu_condition1): j_s + .. + j_k <= n - k - s for s = 1..k
        tail = 0
        ok = True
        for s in range(k, 0, -1):
            tail += js[s]
            if tail > n - k - s:
                ok = False
                break
        if ok:
            return k, tuple(js)
    return None


def permissibility(mu: Weight) -> int | None:
    """The staircase parameter k when mu is permissible, else None."""
    params = permissible_parameters(mu)
    return None if params is None else params[0]


def mu_form_weights(alg: AlgebraSpec, max_k: int | None = None):
    """Yield every staircase weight with 1 <= k <= min(max_k, n/2), without
    the (mu_condition1) cut — the sampling grid for the P/NE invariants."""
    n = alg.n
    top = n // 2 if max_k is None else min(max_k, n // 2)

    def parts(total: int, slots: int):
        if slots == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in parts(total - first, slots - 1):
                yield (first, *rest)

    for k in range(1, top + 1):
        for js in parts(n - k, k + 1):
            yield mu_form_weight(alg, k, js)


# ---------------------------------------------------------------------------
# duality
# ---------------------------------------------------------------------------


def mu_bottom(mu: Weight) -> Weight:
    """Lambda_mu - 2rho1: the lowest primitive weight of the Kac module on
    top of mu's block."""
    return capital_lambda(mu) - special_weight(mu.alg, "two_rho1")


def mu_star(mu: Weight) -> Weight:
    """The highest weight of the dual irreducible: reverse(2rho1 - Lambda_mu),
    except at mu^(n-1) where Lambda collides with Lambda_{-alpha_min} and the
    dual is -alpha_min."""
    _require_sl(mu)
    _require_integral(mu)
    _require_dominant(mu)
    if mu.coords == special_weight(mu.alg, "mu_j", j=mu.alg.n - 1).coords:
        return -alpha_min(mu.alg)
    return (special_weight(mu.alg, "two_rho1") - capital_lambda(mu)).reverse()


# ---------------------------------------------------------------------------
# Young-diagram multiplicities
# ---------------------------------------------------------------------------


def gl1_partition(mu: Weight) -> tuple[int, ...]:
    """The even-block partition of a weight in the paired form
    (lam_1..lam_m | -lam'_n..-lam'_1) with lam' the transpose partition;
    DomainError when the odd block is not that transpose."""
    _require_sl(mu)
    m, n = mu.alg.m, mu.alg.n
    even, odd = mu.even_block, mu.odd_block
    lam: list[int] = []
    for x in even:
        if x.denominator != 1 or x < 0 or x > n:
            raise DomainError(f"{mu}: even block is not a partition inside the {m}x{n} box")
        lam.append(int(x))
    if any(lam[i] < lam[i + 1] for i in range(m - 1)):
        raise DomainError(f"{mu}: even block is not nonincreasing")
    transpose = [sum(1 for x in lam if x >= nu) for nu in range(1, n + 1)]
    expected = tuple(Q(-transpose[n - 1 - t]) for t in range(n))
    if tuple(odd) != expected:
        raise DomainError(
            f"{mu}: odd block does not pair with the even block's transpose"
        )
    return tuple(lam)


def kappa_multiplicity(lam: Weight) -> int:
    """Number of ways to remove two boxes of the even-block diagram, from
    distinct rows and distinct columns, leaving a standard diagram."""
    rows = list(gl1_partition(lam))
    m = len(rows)
    count = 0
    for r1 in range(m):
        for r2 in range(r1 + 1, m):
            if rows[r1] == rows[r2] or rows[r2] < 1:
                continue
            trial = rows.copy()
            trial[r1] -= 1
            trial[r2] -= 1
            if all(trial[i] >= trial[i + 1] for i in range(m - 1)):
                count += 1
    return count


# ---------------------------------------------------------------------------
# the explicit weight lists
# ---------------------------------------------------------------------------

FAMILY_KINDS = ("p_vee_mu_l", "p_vee_minus_amin", "p_plus_mu_l")


def _descending_tuples(lo: int, hi: int, length: int):
    """Strictly decreasing integer tuples of the given length inside [lo, hi]."""
    if length == 0:
        yield ()
        return
    for first in range(hi, lo + length - 2, -1):
        for rest in _descending_tuples(lo, first - 1, length - 1):
            yield (first, *rest)


def _mu_ij_sum(alg: AlgebraSpec, pairs) -> Weight:
    total = Weight.zero(alg)
    for i, j in pairs:
        total = total + special_weight(alg, "mu_ij", i=i, j=j)
    return total


def enumerate_family(alg: AlgebraSpec, kind: str, l: int | None = None) -> list[Weight]:
    """The explicit weight lists attached to the three display families.

    ``p_vee_mu_l``:   the dominant weights whose Kac module has mu^(l) as a
                      primitive weight (empty at l = n-1, where the printed
                      parameter window is vacuous).
    ``p_vee_minus_amin``: same with -alpha_min in place of mu^(l).
    ``p_plus_mu_l``:  the higher-level half of the primitive weights of the
                      Kac module on mu^(l), in display order.

    Lists are deduplicated preserving order; every member is checked dominant
    and integral before being returned.
    """
    if alg.family != FAMILY_SL:
        raise DomainError("the weight lists are an sl notion")
    if kind not in FAMILY_KINDS:
        raise DomainError(f"unknown family kind {kind!r}")
    n = alg.n
    out: list[Weight] = []
    if kind == "p_vee_minus_amin":
        base = -alpha_min(alg)
        amin = alpha_min(alg)
        for k in range(0, n):
            for js in _descending_tuples(0, n - 2, k):
                summand = _mu_ij_sum(alg, [(i + 1, js[i]) for i in range(k)])
                for theta in (0, 1):
                    out.append(base + summand + theta * amin)
    else:
        if l is None or not 0 <= l <= n - 1:
            raise RangeError(f"need 0 <= l <= {n - 1}, got {l!r}")
        if kind == "p_vee_mu_l":
            for s in range(1, n - l):
                root_a = odd_root(alg, alg.m - n + l + s + 1, n - l - s)
                root_b = odd_root(alg, s, n + 1 - s)
                for high in _descending_tuples(l + 2, n - 1, s - 1):
                    for k in range(s, n):
                        for low in _descending_tuples(0, l - 1, k - s):
                            pairs = (
                                [(i + 1, high[i]) for i in range(s - 1)]
                                + [(s, l)]
                                + [(s + 1 + i, low[i]) for i in range(k - s)]
                            )
                            summand = _mu_ij_sum(alg, pairs)
                            for theta_a in (0, 1):
                                for theta_b in (0, 1):
                                    out.append(
                                        summand + theta_a * root_a + theta_b * root_b
                                    )
        else:  # p_plus_mu_l
            mu_l = special_weight(alg, "mu_j", j=l)
            amax = alpha_max(alg)
            amin = alpha_min(alg)
            zero = Weight.zero(alg)
            members: list[Weight] = [mu_l]
            if l >= 1:
                prev = special_weight(alg, "mu_j", j=l - 1)
                members += [mu_l - amax, prev + amax, prev]
            members.append(zero)
            if l <= n - 2:
                members += [w - amin for w in members]
            out = members
    seen: set[tuple] = set()
    unique: list[Weight] = []
    for w in out:
        if w.coords not in seen:
            seen.add(w.coords)
            unique.append(w)
    for w in unique:
        if not (w.is_dominant() and w.is_integral()):
            raise AssertionError(f"family {kind} emitted the non-dominant weight {w}")
    return unique


# ---------------------------------------------------------------------------
# the bundled report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AtypicalityReport:
    mu: Weight
    matrix: list[list[int]]
    atypical_roots: list[Position]
    nqc: list[list[str]]
    east_chains: list[list[Position]]
    north_chains: list[list[Position]]
    ne_union: list[Position]
    lambda_mu: Weight
    p_mu: list[Position]

    def to_dict(self) -> dict:
        return {
            "mu": str(self.mu),
            "matrix": [list(row) for row in self.matrix],
            "atypical_roots": [[i, eta] for i, eta in self.atypical_roots],
            "nqc": [list(row) for row in self.nqc],
            "east_chains": [[[i, eta] for i, eta in chain] for chain in self.east_chains],
            "north_chains": [[[i, eta] for i, eta in chain] for chain in self.north_chains],
            "ne_union": [[i, eta] for i, eta in self.ne_union],
            "lambda_mu": str(self.lambda_mu),
            "p_mu": [[i, eta] for i, eta in self.p_mu],
        }


def build_report(mu: Weight) -> AtypicalityReport:
    east, north, union = ne_chains(mu)
    return AtypicalityReport(
        mu=mu,
        matrix=atypicality_matrix(mu),
        atypical_roots=atypical_roots(mu),
        nqc=nqc_type(mu),
        east_chains=east,
        north_chains=north,
        ne_union=union,
        lambda_mu=capital_lambda(mu),
        p_mu=p_mu(mu),
    )
