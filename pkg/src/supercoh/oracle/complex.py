"""Cochain complexes of a basic classical Lie superalgebra, exactly.

The complex ``C^*(g, V)`` of super-alternating multilinear maps is realised
in an explicit basis: a ``p``-cochain basis element is a pair of a canonical
argument tuple (strictly increasing even basis indices followed by a
non-decreasing run of odd ones — odd arguments may repeat) and a module
basis vector.  The differential is assembled as an exact sparse rational
matrix from the standard formula

    (d phi)(x_0,...,x_p)
        = sum_i (-1)^{i + [x_i]([phi] + [x_0] + ... + [x_{i-1}])}
              x_i . phi(..., x_i omitted, ...)
        + sum_{i<j} (-1)^{j + [x_j]([x_{i+1}] + ... + [x_{j-1}])}
              phi(..., [x_i, x_j] at slot i, ..., x_j omitted, ...),

with the cochain parity ``[phi]`` carried explicitly.  Both the parity and
the weight of a cochain are preserved by ``d``, so every rank computation
happens inside a small (parity, weight) block.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction as Q
from random import Random

from ..errors import DomainError, ResourceError
from ..linalg import RowEchelon, nullspace, sparse_rank
from ..rootsystem import RootSystem
from ..weights import AlgebraSpec, Weight
from .modules import DIM_CAP_ENV, SuperModule, Vec, default_dim_cap

# Canonical argument tuple: (even indices strictly increasing, odd indices
# non-decreasing).  The concatenation is the actual argument list.
ArgTuple = tuple[tuple[int, ...], tuple[int, ...]]


def _koszul_canonical(rs: RootSystem, args) -> tuple[int, ArgTuple | None]:
    """Sort an argument list into canonical order, tracking the Koszul sign.

    Swapping adjacent arguments multiplies a cochain value by
    ``-(-1)^{[a][b]}``: +1 when both are odd, -1 otherwise.  A repeated even
    argument kills the value, so ``(0, None)`` is returned for those.
    """
    arr = list(args)
    par = rs.parity
    sign = 1
    for i in range(1, len(arr)):
        j = i
        while j > 0 and (par(arr[j - 1]), arr[j - 1]) > (par(arr[j]), arr[j]):
            if not (par(arr[j - 1]) and par(arr[j])):
                sign = -sign
            arr[j - 1], arr[j] = arr[j], arr[j - 1]
            j -= 1
    for a, b in zip(arr, arr[1:]):
        if a == b and not par(a):
            return 0, None
    split = sum(1 for a in arr if not par(a))
    return sign, (tuple(arr[:split]), tuple(arr[split:]))


def _argument_tuples(rs: RootSystem, p: int) -> list[ArgTuple]:
    evens = [i for i in range(rs.dim) if rs.parity(i) == 0]
    odds = [i for i in range(rs.dim) if rs.parity(i) == 1]
    out: list[ArgTuple] = []
    for k in range(p, -1, -1):
        for ev in itertools.combinations(evens, k):
            for od in itertools.combinations_with_replacement(odds, p - k):
                out.append((ev, od))
    return out


# Raw differential terms for one output argument tuple, cached because the
# same tuples recur across modules of the same algebra.  Each entry is
#   (action terms, substitution terms)
# where an action term (x_i, [x_i], rest key, base sign) still needs the
# factor (-1)^{[x_i][phi]}, and a substitution term key -> coefficient is
# already complete (it never sees [phi]).
_DTERMS: dict[
    tuple[AlgebraSpec, tuple[int, ...]],
    tuple[list[tuple[int, int, ArgTuple, int]], dict[ArgTuple, Q]],
] = {}


def _d_terms(rs: RootSystem, args: tuple[int, ...]):
    key = (rs.alg, args)
    hit = _DTERMS.get(key)
    if hit is not None:
        return hit
    pars = [rs.parity(x) for x in args]
    pre = [0]
    for q in pars:
        pre.append(pre[-1] + q)
    nev = sum(1 for q in pars if q == 0)
    acts: list[tuple[int, int, ArgTuple, int]] = []
    for i, xi in enumerate(args):
        if i < nev:
            rest: ArgTuple = (args[:i] + args[i + 1 : nev], args[nev:])
        else:
            rest = (args[:nev], args[nev:i] + args[i + 1 :])
        base = -1 if i % 2 else 1
        if pars[i] and pre[i] % 2:
            base = -base
        acts.append((xi, pars[i], rest, base))
    subs: dict[ArgTuple, Q] = {}
    for i in range(len(args)):
        for j in range(i + 1, len(args)):
            br = rs.bracket(args[i], args[j])
            if not br:
                continue
            s0 = -1 if j % 2 else 1
            if pars[j] and (pre[j] - pre[i + 1]) % 2:
                s0 = -s0
            for k, c in br.items():
                sgn, tup = _koszul_canonical(
                    rs, args[:i] + (k,) + args[i + 1 : j] + args[j + 1 :]
                )
                if tup is None:
                    continue
                val = subs.get(tup, Q(0)) + s0 * sgn * c
                if val:
                    subs[tup] = val
                else:
                    subs.pop(tup, None)
    _DTERMS[key] = (acts, subs)
    return acts, subs


@dataclass(frozen=True)
class Cochain:
    """A homogeneous cochain, stored as values on canonical argument tuples.

    ``coeffs[(E, O)]`` is the (sparse) module vector the cochain takes on the
    argument list ``E + O``; values elsewhere follow by super-skew-symmetry.
    ``parity`` is the map parity [phi], an explicit input to the sign rules.
    """

    module: SuperModule
    degree: int
    parity: int
    coeffs: dict[ArgTuple, Vec]

    def is_zero(self) -> bool:
        return not self.coeffs

    def weight(self) -> Weight | None:
        """Common weight of all components, or None for 0 or mixed."""
        seen: Weight | None = None
        for (ev, od), vec in self.coeffs.items():
            wargs = _tuple_weight(self.module.rs, ev + od)
            for v in vec:
                w = self.module.weight(v) - wargs
                if seen is None:
                    seen = w
                elif seen != w:
                    return None
        return seen

    def scaled(self, c: Q) -> "Cochain":
        return make_cochain(
            self.module,
            self.degree,
            {k: {v: c * x for v, x in vec.items()} for k, vec in self.coeffs.items()},
            parity=self.parity,
        )

    def plus(self, other: "Cochain") -> "Cochain":
        if other.module is not self.module or other.degree != self.degree:
            raise DomainError("cannot add cochains of different type")
        out = {k: dict(vec) for k, vec in self.coeffs.items()}
        for k, vec in other.coeffs.items():
            dst = out.setdefault(k, {})
            for v, c in vec.items():
                val = dst.get(v, Q(0)) + c
                if val:
                    dst[v] = val
                else:
                    dst.pop(v, None)
        return make_cochain(self.module, self.degree, out, parity=self.parity)


def make_cochain(
    module: SuperModule,
    degree: int,
    coeffs,
    parity: int | None = None,
) -> Cochain:
    """Normalize and validate a coefficient table into a Cochain."""
    clean: dict[ArgTuple, Vec] = {}
    for key, vec in coeffs.items():
        ev, od = tuple(key[0]), tuple(key[1])
        if len(ev) + len(od) != degree:
            raise DomainError(f"argument tuple {key} is not degree {degree}")
        nz = {v: Q(c) for v, c in vec.items() if c}
        if nz:
            clean[(ev, od)] = nz
    for (ev, od), vec in clean.items():
        for v in vec:
            pv = (module.parity(v) + len(od)) % 2
            if parity is None:
                parity = pv
            elif parity != pv:
                raise DomainError("cochain mixes parities")
    return Cochain(module, degree, 0 if parity is None else parity, clean)


def _tuple_weight(rs: RootSystem, args: tuple[int, ...]) -> Weight:
    w = Weight.zero(rs.alg)
    for x in args:
        w = w + rs.basis[x].weight
    return w


def apply_d(phi: Cochain) -> Cochain:
    """The differential of a cochain, evaluated tuple by tuple."""
    mod = phi.module
    rs = mod.rs
    out: dict[ArgTuple, Vec] = {}
    for key in _argument_tuples(rs, phi.degree + 1):
        args = key[0] + key[1]
        acts, subs = _d_terms(rs, args)
        total: Vec = {}
        for xi, par_xi, rest, base in acts:
            vec = phi.coeffs.get(rest)
            if not vec:
                continue
            s = base
            if par_xi and phi.parity:
                s = -s
            image = mod.act(xi, vec)
            for v, c in image.items():
                val = total.get(v, Q(0)) + s * c
                if val:
                    total[v] = val
                else:
                    total.pop(v, None)
        for tup, coeff in subs.items():
            vec = phi.coeffs.get(tup)
            if not vec:
                continue
            for v, c in vec.items():
                val = total.get(v, Q(0)) + coeff * c
                if val:
                    total[v] = val
                else:
                    total.pop(v, None)
        if total:
            out[key] = total
    return Cochain(mod, phi.degree + 1, phi.parity, out)


def contraction(x: int, phi: Cochain) -> Cochain:
    """(i_x phi)(y_1,...,y_{p-1}) = (-1)^{[x][phi]} phi(x, y_1, ..., y_{p-1})."""
    mod = phi.module
    rs = mod.rs
    if phi.degree == 0:
        return Cochain(mod, 0, (phi.parity + rs.parity(x)) % 2, {})
    front = -1 if rs.parity(x) and phi.parity else 1
    out: dict[ArgTuple, Vec] = {}
    for (ev, od), vec in phi.coeffs.items():
        args = ev + od
        if x not in args:
            continue
        pos = args.index(x)
        rest = args[:pos] + args[pos + 1 :]
        sgn, check = _koszul_canonical(rs, (x,) + rest)
        assert check == (ev, od)
        if pos < len(ev):
            key: ArgTuple = (ev[:pos] + ev[pos + 1 :], od)
        else:
            key = (ev, od[: pos - len(ev)] + od[pos - len(ev) + 1 :])
        dst = out.setdefault(key, {})
        for v, c in vec.items():
            val = dst.get(v, Q(0)) + front * sgn * c
            if val:
                dst[v] = val
            else:
                dst.pop(v, None)
        if not dst:
            del out[key]
    return Cochain(mod, phi.degree - 1, (phi.parity + rs.parity(x)) % 2, out)


def theta(x: int, phi: Cochain) -> Cochain:
    """The Lie action of a basis element on a cochain:

    (theta_x phi)(y_1,...,y_p) = x . phi(y_1,...,y_p)
        - sum_i (-1)^{[x]([phi] + [y_1] + ... + [y_{i-1}])}
              phi(y_1, ..., [x, y_i], ..., y_p).
    """
    mod = phi.module
    rs = mod.rs
    px = rs.parity(x)
    out: dict[ArgTuple, Vec] = {}
    for key in _argument_tuples(rs, phi.degree):
        args = key[0] + key[1]
        total: Vec = {}
        vec = phi.coeffs.get(key)
        if vec:
            for v, c in mod.act(x, vec).items():
                total[v] = c
        presum = 0
        for i, yi in enumerate(args):
            if i:
                presum += rs.parity(args[i - 1])
            br = rs.bracket(x, yi)
            if br:
                s0 = -1 if px and (phi.parity + presum) % 2 else 1
                for k, c in br.items():
                    sgn, tup = _koszul_canonical(
                        rs, args[:i] + (k,) + args[i + 1 :]
                    )
                    if tup is None:
                        continue
                    src = phi.coeffs.get(tup)
                    if not src:
                        continue
                    for v, cv in src.items():
                        val = total.get(v, Q(0)) - s0 * sgn * c * cv
                        if val:
                            total[v] = val
                        else:
                            total.pop(v, None)
        if total:
            out[key] = total
    return Cochain(mod, phi.degree, (phi.parity + px) % 2, out)


def contraction_and_theta(x: int, phi: Cochain) -> tuple[Cochain, Cochain]:
    """Both operators at once; theta is evaluated by its own formula, so the
    Cartan identity d i_x + i_x d = theta_x stays an independent check."""
    return contraction(x, phi), theta(x, phi)


def random_cochain(module: SuperModule, degree: int, rng: Random, parity: int | None = None) -> Cochain:
    """A reproducible random cochain, for identity-style property tests."""
    rs = module.rs
    coeffs: dict[ArgTuple, Vec] = {}
    tuples = _argument_tuples(rs, degree)
    if parity is None:
        parity = rng.randrange(2)
    for key in tuples:
        od = len(key[1])
        for v in range(module.dim):
            if (module.parity(v) + od) % 2 != parity:
                continue
            if rng.random() < 0.3:
                c = rng.randint(-4, 4)
                if c:
                    coeffs.setdefault(key, {})[v] = Q(c)
    return make_cochain(module, degree, coeffs, parity=parity)


class CochainComplex:
    """C^0 .. C^{p_max+1} with exact differentials and block-wise ranks.

    With ``weight_zero_only`` the basis is restricted to weight-zero
    cochains; since d preserves weights this is a subcomplex, and it is the
    home of the g0-invariant reduction.
    """

    def __init__(
        self,
        alg: AlgebraSpec,
        module: SuperModule,
        p_max: int = 2,
        max_dim: int | None = None,
        weight_zero_only: bool = False,
    ):
        if module.alg != alg:
            raise DomainError("module was built for a different algebra")
        if p_max < 0:
            raise DomainError("p_max must be >= 0")
        self.alg = alg
        self.module = module
        self.rs = module.rs
        self.p_max = p_max
        self.weight_zero_only = weight_zero_only
        cap = default_dim_cap() if max_dim is None else max_dim
        zero = Weight.zero(alg)

        self.tuples: list[list[ArgTuple]] = []
        self.tindex: list[dict[ArgTuple, int]] = []
        self.basis: list[list[tuple[int, int]]] = []  # (tuple idx, module idx)
        self.bindex: list[dict[tuple[int, int], int]] = []
        self.bkeys: list[list[tuple[int, Weight]]] = []  # (parity, weight)
        for p in range(p_max + 2):
            tups = _argument_tuples(self.rs, p)
            self.tuples.append(tups)
            self.tindex.append({t: i for i, t in enumerate(tups)})
            plist: list[tuple[int, int]] = []
            keys: list[tuple[int, Weight]] = []
            for ti, (ev, od) in enumerate(tups):
                tw = _tuple_weight(self.rs, ev + od)
                tp = len(od) % 2
                for v in range(module.dim):
                    w = module.weight(v) - tw
                    if weight_zero_only and w != zero:
                        continue
                    plist.append((ti, v))
                    keys.append(((module.parity(v) + tp) % 2, w))
            if len(plist) > cap:
                raise ResourceError(
                    f"cochain space C^{p} has dimension {len(plist)}, above the "
                    f"cap {cap}; enable the invariant reduction "
                    f"(--invariant-reduction on) or raise {DIM_CAP_ENV}"
                )
            self.basis.append(plist)
            self.bindex.append({bv: i for i, bv in enumerate(plist)})
            self.bkeys.append(keys)

        self.d: list[dict[int, Vec]] = [self._assemble(p) for p in range(p_max + 1)]
        self._rank_cache: dict[int, dict[tuple[int, Weight], int]] = {}

    # -- assembly ------------------------------------------------------

    @property
    def dims(self) -> list[int]:
        return [len(b) for b in self.basis]

    def _assemble(self, p: int) -> dict[int, Vec]:
        mod = self.module
        bx_in = self.bindex[p]
        bx_out = self.bindex[p + 1]
        tix = self.tindex[p]
        d: dict[int, Vec] = {}

        def put(col: int, row: int, c: Q) -> None:
            colvec = d.setdefault(col, {})
            val = colvec.get(row, Q(0)) + c
            if val:
                colvec[row] = val
            else:
                colvec.pop(row, None)

        for ti, (ev, od) in enumerate(self.tuples[p + 1]):
            acts, subs = _d_terms(self.rs, ev + od)
            for xi, par_xi, rest, base in acts:
                ci = tix[rest]
                odd_rest = len(rest[1])
                for v, image in mod.actions[xi].items():
                    col = bx_in.get((ci, v))
                    if col is None:
                        continue
                    s = base
                    if par_xi and (mod.parity(v) + odd_rest) % 2:
                        s = -s
                    for vp, c in image.items():
                        row = bx_out.get((ti, vp))
                        if row is not None:
                            put(col, row, s * c)
            for tup, coeff in subs.items():
                ci = tix[tup]
                for v in range(mod.dim):
                    col = bx_in.get((ci, v))
                    if col is None:
                        continue
                    row = bx_out.get((ti, v))
                    if row is not None:
                        put(col, row, coeff)
        return {col: vec for col, vec in d.items() if vec}

    # -- ranks and cohomology -------------------------------------------

    def _ranks(self, p: int) -> dict[tuple[int, Weight], int]:
        """Rank of d_p split by the (parity, weight) block of its columns."""
        if p < 0 or p > self.p_max:
            return {}
        hit = self._rank_cache.get(p)
        if hit is not None:
            return hit
        groups: dict[tuple[int, Weight], list[Vec]] = {}
        ckeys = self.bkeys[p]
        rkeys = self.bkeys[p + 1]
        for col, vec in self.d[p].items():
            key = ckeys[col]
            for row in vec:
                assert rkeys[row] == key, "differential mixed two blocks"
            groups.setdefault(key, []).append(vec)
        out = {
            key: sparse_rank(vecs, len(self.basis[p + 1]))
            for key, vecs in groups.items()
        }
        self._rank_cache[p] = out
        return out

    def d_apply(self, p: int, vec: Vec) -> Vec:
        """Image under d_p of a coefficient vector on basis[p]."""
        out: Vec = {}
        dp = self.d[p]
        for col, c in vec.items():
            colvec = dp.get(col)
            if not colvec:
                continue
            for row, x in colvec.items():
                val = out.get(row, Q(0)) + c * x
                if val:
                    out[row] = val
                else:
                    out.pop(row, None)
        return out

    def check_d_squared(self) -> bool:
        """d_{p+1} o d_p = 0 for every stored pair, entry-exact."""
        for p in range(self.p_max):
            for col in self.d[p]:
                if self.d_apply(p + 1, self.d[p][col]):
                    return False
        return True

    def cohomology(self) -> list[dict]:
        """Per-degree record: dimensions and H^p split by cochain parity."""
        out = []
        for p in range(self.p_max + 1):
            rk_out = self._ranks(p)
            rk_in = self._ranks(p - 1)
            counts: dict[tuple[int, Weight], int] = {}
            for key in self.bkeys[p]:
                counts[key] = counts.get(key, 0) + 1
            h_even = h_odd = 0
            for key, dimk in counts.items():
                h = dimk - rk_out.get(key, 0) - rk_in.get(key, 0)
                assert h >= 0
                if key[0]:
                    h_odd += h
                else:
                    h_even += h
            dim_even = sum(1 for key in self.bkeys[p] if key[0] == 0)
            out.append(
                {
                    "degree": p,
                    "dim": len(self.basis[p]),
                    "dim_even": dim_even,
                    "dim_odd": len(self.basis[p]) - dim_even,
                    "rank_d": sum(rk_out.values()),
                    "h_even": h_even,
                    "h_odd": h_odd,
                    "h": h_even + h_odd,
                }
            )
        return out

    def cohomology_dims(self) -> list[int]:
        return [rec["h"] for rec in self.cohomology()]


def cochain_complex(
    alg: AlgebraSpec,
    module: SuperModule,
    p_max: int = 2,
    max_dim: int | None = None,
) -> CochainComplex:
    return CochainComplex(alg, module, p_max, max_dim=max_dim)


def _g0_generator_indices(rs: RootSystem) -> list[int]:
    out: list[int] = []
    for e_idx, f_idx in rs.g0_simple_pairs():
        out.append(e_idx)
        out.append(f_idx)
    return out


def _invariant_dims(cx: CochainComplex) -> list[int]:
    """H^p of the g0-invariant subcomplex inside the weight-zero block.

    Invariance is the joint kernel of theta_x for the simple g0 generators
    (Cartans act by the weight, which is zero on this block).
    """
    rs = cx.rs
    mod = cx.module
    gens = _g0_generator_indices(rs)
    inv_basis: list[list[Vec]] = []
    for p in range(cx.p_max + 2):
        n = len(cx.basis[p])
        if n == 0:
            inv_basis.append([])
            continue
        rows: list[list[Q]] = []
        for x in gens:
            mat: dict[int, Vec] = {}
            for ti, (ev, od) in enumerate(cx.tuples[p]):
                args = ev + od
                # x . phi(args) piece: module action, diagonal in the tuple.
                for v, image in mod.actions[x].items():
                    col = cx.bindex[p].get((ti, v))
                    if col is None:
                        continue
                    for vp, c in image.items():
                        row = cx.bindex[p].get((ti, vp))
                        if row is not None:
                            dst = mat.setdefault(col, {})
                            dst[row] = dst.get(row, Q(0)) + c
                # minus phi(..., [x, y_i], ...) pieces (x is even: no signs).
                for i in range(len(args)):
                    br = rs.bracket(x, args[i])
                    for k, c in br.items():
                        sgn, tup = _koszul_canonical(
                            rs, args[:i] + (k,) + args[i + 1 :]
                        )
                        if tup is None:
                            continue
                        ci = cx.tindex[p][tup]
                        for v in range(mod.dim):
                            col = cx.bindex[p].get((ci, v))
                            row = cx.bindex[p].get((ti, v))
                            if col is None or row is None:
                                continue
                            dst = mat.setdefault(col, {})
                            dst[row] = dst.get(row, Q(0)) - sgn * c
            # transpose into dense rows of the stacked operator matrix
            dense: dict[int, list[Q]] = {}
            for col, colvec in mat.items():
                for row, c in colvec.items():
                    if c:
                        dense.setdefault(row, [Q(0)] * n)[col] = c
            rows.extend(dense.values())
        kernel = nullspace(rows, n)
        inv_basis.append([{i: c for i, c in enumerate(vec) if c} for vec in kernel])

    ranks: list[int] = []
    for p in range(cx.p_max + 1):
        images = [cx.d_apply(p, w) for w in inv_basis[p]]
        ranks.append(sparse_rank(images, len(cx.basis[p + 1])))
    dims = []
    for p in range(cx.p_max + 1):
        below = ranks[p - 1] if p else 0
        h = len(inv_basis[p]) - ranks[p] - below
        assert h >= 0
        dims.append(h)
    return dims


def cohomology_dims(
    alg: AlgebraSpec,
    module: SuperModule,
    p_max: int = 2,
    max_dim: int | None = None,
    invariant_reduction: bool = False,
) -> list[int]:
    """dim H^p(g, V) for p = 0..p_max, over the rationals.

    The invariant reduction computes the same dimensions on the
    g0-invariant weight-zero subcomplex.  It is an optimization backed by
    the fact that every cocycle is cohomologous to an invariant one; it is
    never the sole evidence — sweeps validate it against the full complex
    on their smallest instance (see ``invariant_reduction_agrees``).
    """
    if invariant_reduction:
        cx = CochainComplex(alg, module, p_max, max_dim=max_dim, weight_zero_only=True)
        return _invariant_dims(cx)
    return cochain_complex(alg, module, p_max, max_dim=max_dim).cohomology_dims()


def invariant_reduction_agrees(
    alg: AlgebraSpec,
    module: SuperModule,
    p_max: int = 2,
    max_dim: int | None = None,
) -> bool:
    """Exact agreement gate between the reduced and the full computation."""
    full = cohomology_dims(alg, module, p_max, max_dim=max_dim)
    reduced = cohomology_dims(
        alg, module, p_max, max_dim=max_dim, invariant_reduction=True
    )
    return full == reduced


def verify_cocycle(phi: Cochain, module: SuperModule | None = None) -> dict[str, bool]:
    """Exact membership report {is_cocycle, is_coboundary} for a cochain."""
    mod = phi.module
    if module is not None and module is not mod:
        raise DomainError("cochain was built over a different module")
    is_cocycle = apply_d(phi).is_zero()
    if phi.is_zero():
        return {"is_cocycle": True, "is_coboundary": True}
    if phi.degree == 0:
        return {"is_cocycle": is_cocycle, "is_coboundary": False}

    rs = mod.rs
    # Split the cochain by weight; d preserves (parity, weight), so each
    # piece must be hit separately from the matching block of C^{p-1}.
    by_weight: dict[Weight, dict[ArgTuple, Vec]] = {}
    for (ev, od), vec in phi.coeffs.items():
        tw = _tuple_weight(rs, ev + od)
        for v, c in vec.items():
            w = mod.weight(v) - tw
            by_weight.setdefault(w, {}).setdefault((ev, od), {})[v] = c

    prev = phi.degree - 1
    for w, piece in by_weight.items():
        candidates: list[Cochain] = []
        for ev, od in _argument_tuples(rs, prev):
            tw = _tuple_weight(rs, ev + od)
            for v in range(mod.dim):
                if (mod.parity(v) + len(od)) % 2 != phi.parity:
                    continue
                if mod.weight(v) - tw != w:
                    continue
                candidates.append(
                    Cochain(mod, prev, phi.parity, {(ev, od): {v: Q(1)}})
                )
        images = [apply_d(psi) for psi in candidates]
        rows: dict[tuple[ArgTuple, int], int] = {}
        for img in images:
            for key, vec in img.coeffs.items():
                for v in vec:
                    rows.setdefault((key, v), len(rows))
        for key, vec in piece.items():
            for v in vec:
                rows.setdefault((key, v), len(rows))
        ech = RowEchelon(len(rows))
        for img in images:
            dense = [Q(0)] * len(rows)
            for key, vec in img.coeffs.items():
                for v, c in vec.items():
                    dense[rows[(key, v)]] = c
            ech.add(dense)
        target = [Q(0)] * len(rows)
        for key, vec in piece.items():
            for v, c in vec.items():
                target[rows[(key, v)]] = c
        if not ech.contains(target):
            return {"is_cocycle": is_cocycle, "is_coboundary": False}
    return {"is_cocycle": is_cocycle, "is_coboundary": True}
