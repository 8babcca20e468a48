"""Explicit cocycles witnessing the nonzero low-degree cohomology classes.

Each builder produces a concrete cochain on an explicitly constructed
module and normalizes any free scalar so that the lexicographically first
nonzero matrix entry of the underlying intertwiner equals 1.  The six kinds:

  phi_18          1-cochain on the Kac module at 2*rho_1 + alpha_max;
                  vanishes on g_0 and g_{-1}, sends e_alpha into the bottom
                  level through a g_0-module isomorphism.
  phi_prime_125   1-cochain on the Kac module at 2*rho_1; Cartan values are
                  multiples of the bottom vector, odd raising vectors go to
                  the bottom product with one factor removed.
  phi_21          2-cochain supported on pairs of odd raising vectors: the
                  unique g_0-invariant symmetric pairing into the bottom
                  level (highest weights 2*rho_1 + 2*alpha_max, or
                  2*rho_1 + eta^(1) when n >= 2).
  phi_22          2-cochain at 2*rho_1 + alpha_max mixing Cartan x raising
                  and raising x raising values; rebuilt from phi_18 and the
                  same constants as phi_prime_125, checked closed.
  phi1_top        1-cochain on an irreducible whose bottom level is a copy
                  of g_{+1} (mu^(n-1) for sl, 2*rho_1 for ospc).
  phi1_bottom     1-cochain on the irreducible at -alpha_min, sending odd
                  lowering vectors onto the top level.
"""

from __future__ import annotations

from fractions import Fraction as Q

from ..errors import DomainError
from ..linalg import nullspace
from ..rootsystem import RootSystem
from ..weights import AlgebraSpec, FAMILY_SL, Weight, alpha_max, special_weight
from .complex import ArgTuple, Cochain, apply_d, make_cochain
from .modules import SuperModule, Vec, build_irreducible, build_kac_module

COCYCLE_KINDS = (
    "phi_18",
    "phi_prime_125",
    "phi_21",
    "phi_22",
    "phi1_top",
    "phi1_bottom",
)


def _level_indices(mod: SuperModule, which: str) -> list[int]:
    levels = mod.levels
    pick = min(levels) if which == "bottom" else max(levels)
    return [i for i, l in enumerate(levels) if l == pick]


def _g0_generators(rs: RootSystem) -> list[int]:
    gens = list(rs.cartan_idx)
    for e_idx, f_idx in rs.g0_simple_pairs():
        gens.append(e_idx)
        gens.append(f_idx)
    return gens


def _g0_intertwiner(mod: SuperModule, domain: list[int], codomain: list[int]) -> list[Vec]:
    """The g_0-module map J with J([x, b]) = x.J(b), as one sparse module
    vector per domain element.  Unique up to scale by construction; the
    scale is fixed by the first nonzero entry in (domain, codomain) order."""
    rs = mod.rs
    dpos = {b: i for i, b in enumerate(domain)}
    cpos = {v: t for t, v in enumerate(codomain)}
    nc = len(codomain)
    nvar = len(domain) * nc
    rows: list[list[Q]] = []
    for x in _g0_generators(rs):
        amat: dict[int, Vec] = {}
        for t, v in enumerate(codomain):
            for vp, c in mod.actions[x].get(v, {}).items():
                r = cpos.get(vp)
                assert r is not None, "codomain is not g0-stable"
                amat.setdefault(t, {})[r] = c
        for i, b in enumerate(domain):
            eq: dict[int, dict[int, Q]] = {}
            for t, img in amat.items():
                for r, c in img.items():
                    dst = eq.setdefault(r, {})
                    dst[i * nc + t] = dst.get(i * nc + t, Q(0)) + c
            for y, cj in rs.bracket(x, b).items():
                j = dpos.get(y)
                assert j is not None, "domain is not g0-stable"
                for r in range(nc):
                    dst = eq.setdefault(r, {})
                    dst[j * nc + r] = dst.get(j * nc + r, Q(0)) - cj
            for d in eq.values():
                row = [Q(0)] * nvar
                live = False
                for var, c in d.items():
                    if c:
                        row[var] = c
                        live = True
                if live:
                    rows.append(row)
    kernel = nullspace(rows, nvar)
    assert len(kernel) == 1, (
        f"expected a unique g0-intertwiner, found {len(kernel)}: "
        "module construction bug"
    )
    vec = kernel[0]
    scale = next(c for c in vec if c)
    vec = [c / scale for c in vec]
    return [
        {codomain[t]: vec[i * nc + t] for t in range(nc) if vec[i * nc + t]}
        for i in range(len(domain))
    ]


def _check_odd_pairing(rs: RootSystem) -> None:
    for p, e_idx in enumerate(rs.odd_e_idx):
        f_idx = rs.odd_f_idx[p]
        assert rs.basis[f_idx].weight == -rs.basis[e_idx].weight


def _phi_prime_constants(mod: SuperModule) -> tuple[list[Q], list[Q]]:
    """The constants of the 2*rho_1 cocycle: per-Cartan values c_h and
    per-odd-root values c_alpha.

    The cocycle lives in the ansatz space spanned by h -> (bottom vector)
    and e_alpha -> (bottom product with the alpha factor removed); the
    constants are the one-dimensional kernel of d there, scaled so that
    c_alpha at the first odd root is (-1)^deg / D with D = dim g_{+1}.
    For the sl family this reproduces (-1)^{deg + m(alpha)} / (mn) exactly,
    which is asserted.
    """
    rs = mod.rs
    _check_odd_pairing(rs)
    words = _creation_index(mod)
    flist = rs.odd_f_idx
    dim1 = len(flist)
    bottom = words[tuple(flist) + mod.creation[mod.hw_index]]
    ansatz: list[Cochain] = []
    for h_idx in rs.cartan_idx:
        ansatz.append(
            make_cochain(mod, 1, {((h_idx,), ()): {bottom: Q(1)}})
        )
    for p, e_idx in enumerate(rs.odd_e_idx):
        ansatz.append(
            make_cochain(
                mod, 1, {((), (e_idx,)): _drop_one_product(mod, words, p, {mod.hw_index: Q(1)})}
            )
        )
    images = [apply_d(phi) for phi in ansatz]
    support: dict[tuple[ArgTuple, int], int] = {}
    for img in images:
        for key, vec in img.coeffs.items():
            for v in vec:
                support.setdefault((key, v), len(support))
    rows = [[Q(0)] * len(ansatz) for _ in support]
    for col, img in enumerate(images):
        for key, vec in img.coeffs.items():
            for v, c in vec.items():
                rows[support[(key, v)]][col] = c
    kernel = nullspace(rows, len(ansatz))
    assert len(kernel) == 1, (
        f"2rho1 cocycle ansatz has kernel dimension {len(kernel)}, expected 1"
    )
    vec = kernel[0]
    ncar = len(rs.cartan_idx)
    deg = dim1 % 2
    first = vec[ncar]
    assert first, "cocycle vanishes on the first odd root: structure bug"
    scale = Q((-1) ** deg, dim1) / first
    vec = [c * scale for c in vec]
    c_h, c_alpha = vec[:ncar], vec[ncar:]
    if mod.alg.family == FAMILY_SL:
        want = [Q((-1) ** ((deg + p) % 2), dim1) for p in range(dim1)]
        assert c_alpha == want, "sl constants disagree with the closed form"
    return c_h, c_alpha


def _creation_index(mod: SuperModule) -> dict[tuple[int, ...], int]:
    out = {word: i for i, word in enumerate(mod.creation)}
    assert len(out) == mod.dim
    return out


def _drop_one_product(
    mod: SuperModule,
    words: dict[tuple[int, ...], int],
    skip: int,
    u: Vec,
) -> Vec:
    """Apply the ascending product of all odd lowerings except position
    ``skip`` to a top-level vector.  Every basis vector of the Kac module is
    such a product, so this is pure index arithmetic with sign +1."""
    rs = mod.rs
    flist = rs.odd_f_idx
    prefix = tuple(fi for p, fi in enumerate(flist) if p != skip)
    out: Vec = {}
    for k, c in u.items():
        out[words[prefix + mod.creation[k]]] = c
    return out


def _require(cond: bool, kind: str, lam: Weight, wanted: str) -> None:
    if not cond:
        raise DomainError(
            f"{kind} requires highest weight {wanted}; got {lam}"
        )


def _get_module(
    alg: AlgebraSpec, lam: Weight, kind: str, module: SuperModule | None
) -> SuperModule:
    if module is not None:
        if module.alg != alg or module.kind != kind:
            raise DomainError(f"supplied module is not a {kind} module over {alg}")
        if module.weight(module.hw_index) != lam:
            raise DomainError("supplied module has the wrong highest weight")
        return module
    if kind == "kac":
        return build_kac_module(alg, lam)
    return build_irreducible(alg, lam)


def build_named_cocycle(
    kind: str,
    alg: AlgebraSpec,
    lam: Weight,
    module: SuperModule | None = None,
) -> Cochain:
    """Construct one of the explicit cocycles; the result is checked closed.

    ``module`` may supply a prebuilt module (Kac for the phi_* kinds,
    irreducible for the phi1_* kinds) to avoid rebuilding it.
    """
    if kind not in COCYCLE_KINDS:
        raise DomainError(f"unknown cocycle kind {kind!r}")
    two_rho1 = special_weight(alg, "two_rho1")
    amax = alpha_max(alg)

    if kind == "phi_18":
        _require(lam == two_rho1 + amax, kind, lam, "2rho1 + alpha_max")
        mod = _get_module(alg, lam, "kac", module)
        phi = _phi_18(mod)
    elif kind == "phi_prime_125":
        _require(lam == two_rho1, kind, lam, "2rho1")
        mod = _get_module(alg, lam, "kac", module)
        phi = _phi_prime(mod)
    elif kind == "phi_21":
        allowed = [two_rho1 + special_weight(alg, "two_amax")]
        if alg.family == FAMILY_SL and alg.n >= 2:
            allowed.append(two_rho1 + special_weight(alg, "eta1"))
        _require(lam in allowed, kind, lam, "2rho1 + 2alpha_max (or 2rho1 + eta^(1))")
        mod = _get_module(alg, lam, "kac", module)
        phi = _phi_21(mod)
    elif kind == "phi_22":
        _require(lam == two_rho1 + amax, kind, lam, "2rho1 + alpha_max")
        mod = _get_module(alg, lam, "kac", module)
        phi = _phi_22(mod)
    elif kind == "phi1_top":
        if alg.family == FAMILY_SL:
            wanted = special_weight(alg, "mu_j", j=alg.n - 1)
            _require(lam == wanted, kind, lam, "mu^(n-1)")
        else:
            _require(lam == two_rho1, kind, lam, "2rho1")
        mod = _get_module(alg, lam, "irreducible", module)
        phi = _one_cochain_on_odds(mod, raising=True)
    else:  # phi1_bottom
        _require(lam == special_weight(alg, "minus_amin"), kind, lam, "-alpha_min")
        mod = _get_module(alg, lam, "irreducible", module)
        phi = _one_cochain_on_odds(mod, raising=False)

    assert apply_d(phi).is_zero(), f"{kind} is not closed: construction bug"
    assert not phi.is_zero()
    return phi


def _phi_18(mod: SuperModule) -> Cochain:
    rs = mod.rs
    images = _g0_intertwiner(mod, list(rs.odd_e_idx), _level_indices(mod, "bottom"))
    coeffs: dict[ArgTuple, Vec] = {
        ((), (e_idx,)): vec
        for e_idx, vec in zip(rs.odd_e_idx, images)
        if vec
    }
    return make_cochain(mod, 1, coeffs)


def _one_cochain_on_odds(mod: SuperModule, raising: bool) -> Cochain:
    """phi1_top / phi1_bottom: odd vectors onto a boundary level of L."""
    rs = mod.rs
    domain = list(rs.odd_e_idx) if raising else list(rs.odd_f_idx)
    codomain = _level_indices(mod, "bottom" if raising else "top")
    assert len(domain) == len(codomain), (
        "boundary level does not match g_{+-1}: wrong highest weight?"
    )
    images = _g0_intertwiner(mod, domain, codomain)
    coeffs: dict[ArgTuple, Vec] = {
        ((), (b,)): vec for b, vec in zip(domain, images) if vec
    }
    return make_cochain(mod, 1, coeffs)


def _phi_prime(mod: SuperModule) -> Cochain:
    rs = mod.rs
    c_h, c_alpha = _phi_prime_constants(mod)
    words = _creation_index(mod)
    flist = rs.odd_f_idx
    bottom = words[tuple(flist) + mod.creation[mod.hw_index]]
    coeffs: dict[ArgTuple, Vec] = {}
    for i, h_idx in enumerate(rs.cartan_idx):
        if c_h[i]:
            coeffs[((h_idx,), ())] = {bottom: c_h[i]}
    for p, e_idx in enumerate(rs.odd_e_idx):
        coeffs[((), (e_idx,))] = _drop_one_product(
            mod, words, p, {mod.hw_index: c_alpha[p]}
        )
    return make_cochain(mod, 1, coeffs)


def _phi_21(mod: SuperModule) -> Cochain:
    """The unique g_0-invariant symmetric pairing g_{+1} x g_{+1} -> bottom."""
    rs = mod.rs
    odd_e = list(rs.odd_e_idx)
    d1 = len(odd_e)
    codomain = _level_indices(mod, "bottom")
    cpos = {v: t for t, v in enumerate(codomain)}
    nc = len(codomain)
    pairs = [(p, q) for p in range(d1) for q in range(p, d1)]
    ppos = {pq: k for k, pq in enumerate(pairs)}
    nvar = len(pairs) * nc
    rows: list[list[Q]] = []
    for x in _g0_generators(rs):
        amat: dict[int, Vec] = {}
        for t, v in enumerate(codomain):
            for vp, c in mod.actions[x].get(v, {}).items():
                r = cpos.get(vp)
                assert r is not None, "bottom level is not g0-stable"
                amat.setdefault(t, {})[r] = c
        brk = [
            {odd_e.index(y): c for y, c in rs.bracket(x, b).items()}
            for b in odd_e
        ]
        for k, (p, q) in enumerate(pairs):
            eq: dict[int, dict[int, Q]] = {}
            for t, img in amat.items():
                for r, c in img.items():
                    dst = eq.setdefault(r, {})
                    dst[k * nc + t] = dst.get(k * nc + t, Q(0)) + c
            for side, other in ((p, q), (q, p)):
                for y, c in brk[side].items():
                    k2 = ppos[(min(y, other), max(y, other))]
                    for r in range(nc):
                        dst = eq.setdefault(r, {})
                        dst[k2 * nc + r] = dst.get(k2 * nc + r, Q(0)) - c
            for d in eq.values():
                row = [Q(0)] * nvar
                live = False
                for var, c in d.items():
                    if c:
                        row[var] = c
                        live = True
                if live:
                    rows.append(row)
    kernel = nullspace(rows, nvar)
    assert len(kernel) == 1, (
        f"invariant symmetric pairing has nullity {len(kernel)}, expected 1"
    )
    vec = kernel[0]
    scale = next(c for c in vec if c)
    vec = [c / scale for c in vec]
    coeffs: dict[ArgTuple, Vec] = {}
    for k, (p, q) in enumerate(pairs):
        val = {
            codomain[t]: vec[k * nc + t] for t in range(nc) if vec[k * nc + t]
        }
        if val:
            coeffs[((), (odd_e[p], odd_e[q]))] = val
    return make_cochain(mod, 2, coeffs)


def _phi_22(mod: SuperModule) -> Cochain:
    """Rebuild the mixed 2-cocycle at 2rho1 + alpha_max from phi_18.

    With phi_18(e_a) = (prod of all f) u_a, the values are
        phi(h, e_a)    = c_h phi_18(e_a),
        phi(e_b, e_c)  = c_b (prod_{t != b} f) u_c + c_c (prod_{t != c} f) u_b,
    zero elsewhere, with the same constants as the 2rho1 cocycle except the
    degree parity is dim g_{+1} - 1.
    """
    rs = mod.rs
    phi18 = _phi_18(mod)
    base = build_kac_module(mod.alg, special_weight(mod.alg, "two_rho1"))
    c_h, base_c_alpha = _phi_prime_constants(base)
    dim1 = len(rs.odd_e_idx)
    # the degree parity here is dim g_{+1} - 1, flipping every c_alpha sign
    c_alpha = [-c for c in base_c_alpha]
    words = _creation_index(mod)
    full = tuple(rs.odd_f_idx)
    u: list[Vec] = []
    for e_idx in rs.odd_e_idx:
        vec = phi18.coeffs.get(((), (e_idx,)), {})
        lifted: Vec = {}
        for i, c in vec.items():
            word = mod.creation[i]
            assert word[: len(full)] == full
            lifted[words[word[len(full):]]] = c
        u.append(lifted)

    coeffs: dict[ArgTuple, Vec] = {}
    for i, h_idx in enumerate(rs.cartan_idx):
        if not c_h[i]:
            continue
        for e_idx in rs.odd_e_idx:
            vec = phi18.coeffs.get(((), (e_idx,)))
            if vec:
                coeffs[((h_idx,), (e_idx,))] = {v: c_h[i] * c for v, c in vec.items()}
    for p, ep in enumerate(rs.odd_e_idx):
        for q in range(p, dim1):
            eq = rs.odd_e_idx[q]
            val: Vec = {}
            for v, c in _drop_one_product(mod, words, p, u[q]).items():
                val[v] = val.get(v, Q(0)) + c_alpha[p] * c
            for v, c in _drop_one_product(mod, words, q, u[p]).items():
                val[v] = val.get(v, Q(0)) + c_alpha[q] * c
            val = {v: c for v, c in val.items() if c}
            if val:
                coeffs[((), (ep, eq))] = val
    return make_cochain(mod, 2, coeffs)
