"""Explicit finite-dimensional modules with exact rational action matrices.

Three constructions, each returning a :class:`SuperModule` whose action
matrices are indexed by the frozen algebra basis:

* ``build_g0_irreducible`` — the irreducible module of the even part,
  grown by lowering-operator closure from a formal highest-weight vector
  and cut down by the contravariant form at every weight depth;
* ``build_kac_module`` — the induced module on (exterior algebra of the
  odd lowering space) tensor the even irreducible, with the action
  computed by commutator straightening through the Grassmann factor;
* ``build_irreducible`` — the Kac module modulo the radical of its
  contravariant form.

The contravariant form is induced by the antiautomorphism
omega(x) = P x^T P with P the identity for sl(m|n) and
P = diag(1, -1, 1, ..., 1) for osp(2|2n-2); in both cases
omega([x, y]) = [omega(y), omega(x)] is an exact matrix identity, omega
fixes the Cartan pointwise and swaps each raising vector with (a scalar
multiple of) the matching lowering vector.
"""

from __future__ import annotations

import os
from fractions import Fraction
from itertools import combinations

from ..errors import DomainError, ResourceError
from ..linalg import RowEchelon
from ..rootsystem import RootSystem, build_root_system
from ..weights import FAMILY_OSPC, FAMILY_SL, AlgebraSpec, Weight

Q = Fraction
Vec = dict[int, Q]

__all__ = [
    "SuperModule",
    "build_g0_irreducible",
    "build_kac_module",
    "build_irreducible",
    "multiplicity_of_g0_hw",
    "default_dim_cap",
]

#: Environment variable capping the dimension of any module or cochain
#: space the oracle is willing to materialize.
DIM_CAP_ENV = "SUPERCOH_MAX_DIM"


def default_dim_cap() -> int:
    raw = os.environ.get(DIM_CAP_ENV)
    if raw is None:
        return 200_000
    try:
        return int(raw)
    except ValueError as exc:
        raise DomainError(f"{DIM_CAP_ENV} must be an integer, got {raw!r}") from exc


def _axpy(dst: Vec, src: Vec, c: Q) -> None:
    if not c:
        return
    for k, v in src.items():
        val = dst.get(k, Q(0)) + c * v
        if val:
            dst[k] = val
        else:
            dst.pop(k, None)


def _apply(mat: dict[int, Vec], vec: Vec) -> Vec:
    out: Vec = {}
    for col, c in vec.items():
        column = mat.get(col)
        if column:
            _axpy(out, column, c)
    return out


class SuperModule:
    """A weight module given by exact action matrices over the frozen basis.

    ``actions[x]`` maps a basis-vector index to the (sparse) image column
    of that basis vector under algebra element ``x``.  ``creation[i]``
    records how basis vector ``i`` arises from the highest-weight vector:
    a tuple of algebra indices applied right to left (outermost first).
    """

    def __init__(
        self,
        alg: AlgebraSpec,
        kind: str,
        rs: RootSystem,
        basis: list[tuple[str, Weight, int]],
        actions: dict[int, dict[int, Vec]],
        hw_index: int,
        creation: list[tuple[int, ...]],
    ):
        self.alg = alg
        self.kind = kind
        self.rs = rs
        self.basis = basis
        self.actions = actions
        self.hw_index = hw_index
        self.creation = creation
        self._spaces: dict[Weight, tuple[int, ...]] | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def weight(self, i: int) -> Weight:
        return self.basis[i][1]

    def parity(self, i: int) -> int:
        return self.basis[i][2]

    @property
    def levels(self) -> list[Q]:
        return [w.level() for _, w, _ in self.basis]

    def weight_spaces(self) -> dict[Weight, tuple[int, ...]]:
        if self._spaces is None:
            acc: dict[Weight, list[int]] = {}
            for i, (_, w, _) in enumerate(self.basis):
                acc.setdefault(w, []).append(i)
            self._spaces = {w: tuple(v) for w, v in acc.items()}
        return self._spaces

    def weight_space(self, w: Weight) -> tuple[int, ...]:
        return self.weight_spaces().get(w, ())

    def act(self, x: int, vec: Vec) -> Vec:
        return _apply(self.actions[x], vec)

    def check_representation(self, pairs=None) -> bool:
        """[x, y] acts as action(x)action(y) -+ action(y)action(x), exactly."""
        keys = sorted(self.actions)
        keyset = set(keys)
        if pairs is None:
            pairs = [(i, j) for i in keys for j in keys]
        for i, j in pairs:
            pi, pj = self.rs.parity(i), self.rs.parity(j)
            sign = Q(-1) if (pi and pj) else Q(1)
            rhs_coeffs = self.rs.bracket(i, j)
            if any(k not in keyset for k in rhs_coeffs):
                raise DomainError(
                    f"bracket [{i},{j}] leaves the subalgebra this module carries"
                )
            for col in range(self.dim):
                unit = {col: Q(1)}
                lhs = self.act(i, self.act(j, unit))
                _axpy(lhs, self.act(j, self.act(i, unit)), -sign)
                rhs: Vec = {}
                for k, c in rhs_coeffs.items():
                    _axpy(rhs, self.act(k, unit), c)
                if lhs != rhs:
                    return False
        return True


# ---------------------------------------------------------------------------
# the even-part irreducible
# ---------------------------------------------------------------------------


def _require_hw(alg: AlgebraSpec, lam: Weight) -> None:
    if lam.alg != alg:
        raise DomainError(f"weight {lam} does not live in {alg}")
    if not lam.is_integral():
        raise DomainError(f"highest weight {lam} is not integral")
    if not lam.is_dominant():
        raise DomainError(f"highest weight {lam} is not dominant")


def _weyl_dim(alg: AlgebraSpec, lam: Weight) -> int:
    """Weyl dimension formula for the even part; the cross-check oracle."""
    dim = Q(1)
    if alg.family == FAMILY_SL:
        for block in (lam.even_block, lam.odd_block):
            k = len(block)
            for i in range(k):
                for j in range(i + 1, k):
                    dim *= Q(block[i] - block[j] + j - i, j - i)
    else:
        a = lam.coords[1:]
        k = len(a)
        top = [a[t] + k - t for t in range(k)]
        bot = [Q(k - t) for t in range(k)]
        for t in range(k):
            dim *= top[t] / bot[t]
            for s in range(t + 1, k):
                dim *= (top[t] ** 2 - top[s] ** 2) / (bot[t] ** 2 - bot[s] ** 2)
    assert dim.denominator == 1 and dim > 0, f"Weyl formula broke on {lam}"
    return int(dim)


class _EvenLoweringSpace:
    """Shapovalov-style bookkeeping for words in the even simple lowerings.

    A word (i_0, i_1, ...) stands for f_{i_0} f_{i_1} ... v in the even
    Verma module of highest weight ``lam``; the contravariant form of two
    words is computed by pushing raising operators through, using only
    [e_i, f_j] = delta_ij h_i and the diagonal Cartan action.
    """

    def __init__(self, rs: RootSystem, lam: Weight):
        self.rs = rs
        self.lam = lam
        self.simples = rs.g0_simple_pairs()
        self.roots = [rs.basis[e].weight for e, _ in self.simples]
        self._form: dict[tuple[tuple[int, ...], tuple[int, ...]], Q] = {}

    def weight_of(self, word: tuple[int, ...]) -> Weight:
        w = self.lam
        for i in word:
            w = w - self.roots[i]
        return w

    def _e_push(self, i: int, word: tuple[int, ...]) -> dict[tuple[int, ...], Q]:
        """e_i applied to a word vector, inside the Verma module."""
        rs = self.rs
        e_idx, f_idx = self.simples[i]
        out: dict[tuple[int, ...], Q] = {}
        for t, j in enumerate(word):
            if j != i:
                continue
            tail = word[t + 1 :]
            wt = self.lam
            for s in tail:
                wt = wt - self.roots[s]
            hval = Q(0)
            for k, c in rs.bracket(e_idx, f_idx).items():
                hval += c * rs.cartan_pairing(wt, rs.basis[k].matrix)
            if hval:
                shorter = word[:t] + tail
                out[shorter] = out.get(shorter, Q(0)) + hval
        return out

    def form(self, a: tuple[int, ...], b: tuple[int, ...]) -> Q:
        if not a:
            return Q(1) if not b else Q(0)
        key = (a, b)
        hit = self._form.get(key)
        if hit is not None:
            return hit
        total = Q(0)
        for shorter, c in self._e_push(a[0], b).items():
            total += c * self.form(a[1:], shorter)
        self._form[key] = total
        return total


def build_g0_irreducible(alg: AlgebraSpec, lam: Weight) -> SuperModule:
    """The irreducible module of the even part with highest weight ``lam``.

    Grown breadth-first by the simple lowering operators; at each new
    weight the contravariant Gram matrix decides which word classes
    survive, and word classes are represented by their pairing vectors so
    that indefiniteness of the form never forces a bad basis choice.  The
    final dimension is checked against the Weyl dimension formula.
    """
    _require_hw(alg, lam)
    rs = build_root_system(alg)
    space = _EvenLoweringSpace(rs, lam)
    nsimple = len(space.simples)

    # per weight: all candidate words, the echelon of their pairing rows,
    # and which words were kept
    words: dict[Weight, list[tuple[int, ...]]] = {lam: [()]}
    echelons: dict[Weight, RowEchelon] = {}
    kept: dict[Weight, list[tuple[int, ...]]] = {}

    ech0 = RowEchelon(1)
    ech0.add([Q(1)])
    echelons[lam] = ech0
    kept[lam] = [()]

    frontier = [lam]
    while frontier:
        buckets: dict[Weight, list[tuple[int, ...]]] = {}
        for wt in frontier:
            for word in kept[wt]:
                for i in range(nsimple):
                    nw = (i, *word)
                    buckets.setdefault(wt - space.roots[i], []).append(nw)
        frontier = []
        for wt in sorted(buckets, key=lambda w: w.sort_key()):
            cand = buckets[wt]
            assert wt not in kept, "weight reached at two different depths"
            ech = RowEchelon(len(cand))
            sel: list[tuple[int, ...]] = []
            for a in cand:
                row = [space.form(a, b) for b in cand]
                if ech.add(row):
                    sel.append(a)
            if not sel:
                continue
            words[wt] = cand
            echelons[wt] = ech
            kept[wt] = sel
            frontier.append(wt)

    order = sorted(kept, key=lambda w: (-w.level(), w.sort_key()))
    basis: list[tuple[str, Weight, int]] = []
    index: dict[tuple[int, ...], int] = {}
    creation: list[tuple[int, ...]] = []
    for wt in order:
        for word in kept[wt]:
            index[word] = len(basis)
            basis.append((f"w{len(basis)}", wt, 0))
            creation.append(tuple(space.simples[i][1] for i in word))
    hw_index = index[()]

    def expand(vec: dict[tuple[int, ...], Q], wt: Weight) -> Vec:
        """Coordinates of a Verma word combination inside the quotient."""
        if wt not in kept:
            return {}
        cand = words[wt]
        pairing = []
        for b in cand:
            val = Q(0)
            for word, c in vec.items():
                val += c * space.form(b, word)
            pairing.append(val)
        coeffs = echelons[wt].coords(pairing)
        assert coeffs is not None, "pairing vector escaped the candidate span"
        out: Vec = {}
        kept_here = set(kept[wt])
        for i, a in enumerate(cand):
            if coeffs[i]:
                assert a in kept_here, "coefficient on a discarded word"
                out[index[a]] = coeffs[i]
        return out

    actions: dict[int, dict[int, Vec]] = {}
    for k in rs.cartan_idx:
        mat = rs.basis[k].matrix
        col: dict[int, Vec] = {}
        for word, pos in index.items():
            val = rs.cartan_pairing(space.weight_of(word), mat)
            if val:
                col[pos] = {pos: val}
        actions[k] = col

    for i, (e_idx, f_idx) in enumerate(space.simples):
        fcol: dict[int, Vec] = {}
        ecol: dict[int, Vec] = {}
        for word, pos in index.items():
            wt = space.weight_of(word)
            img = expand({(i, *word): Q(1)}, wt - space.roots[i])
            if img:
                fcol[pos] = img
            up = space._e_push(i, word)
            if up:
                img_e = expand(up, wt + space.roots[i])
                if img_e:
                    ecol[pos] = img_e
        actions[f_idx] = fcol
        actions[e_idx] = ecol

    _close_even_actions(rs, actions, len(basis))

    expected = _weyl_dim(alg, lam)
    assert len(basis) == expected, (
        f"lowering closure found dim {len(basis)} but the Weyl formula "
        f"says {expected} for {lam}"
    )

    return SuperModule(alg, "g0", rs, basis, actions, hw_index, creation)


def _commutator(a: dict[int, Vec], b: dict[int, Vec], dim: int) -> dict[int, Vec]:
    out: dict[int, Vec] = {}
    for col in range(dim):
        unit = {col: Q(1)}
        img = _apply(a, _apply(b, unit))
        _axpy(img, _apply(b, _apply(a, unit)), Q(-1))
        if img:
            out[col] = img
    return out


def _close_even_actions(rs: RootSystem, actions: dict[int, dict[int, Vec]], dim: int) -> None:
    """Extend actions from Cartans and simple pairs to every even root
    vector by solving bracket relations one unknown at a time."""
    wanted = set(rs.even_e_idx) | set(rs.even_f_idx) | set(rs.cartan_idx)
    progress = True
    while progress and not wanted <= set(actions):
        progress = False
        known = sorted(actions)
        for i in known:
            for j in known:
                br = rs.bracket(i, j)
                unknown = [k for k in br if k not in actions]
                if len(unknown) != 1 or unknown[0] not in wanted:
                    continue
                k = unknown[0]
                mat = _commutator(actions[i], actions[j], dim)
                for t, c in br.items():
                    if t == k:
                        continue
                    for col, image in actions[t].items():
                        if col not in mat:
                            mat[col] = {}
                        _axpy(mat[col], image, -c)
                inv = Q(1) / br[k]
                actions[k] = {
                    col: {r: v * inv for r, v in image.items()}
                    for col, image in mat.items()
                    if image
                }
                progress = True
        if not progress:
            break
    missing = wanted - set(actions)
    assert not missing, f"could not reach even root vectors {sorted(missing)}"


# ---------------------------------------------------------------------------
# Kac modules
# ---------------------------------------------------------------------------


def build_kac_module(alg: AlgebraSpec, lam: Weight, max_dim: int | None = None) -> SuperModule:
    """The induced module: Grassmann factor over the odd lowerings tensor
    the even irreducible of highest weight ``lam``."""
    _require_hw(alg, lam)
    top = build_g0_irreducible(alg, lam)
    rs = top.rs
    flist = rs.odd_f_idx
    d = len(flist)
    cap = max_dim if max_dim is not None else default_dim_cap()
    total = (1 << d) * top.dim
    if total > cap:
        raise ResourceError(
            f"Kac module dimension {total} exceeds the cap {cap}; raise "
            f"{DIM_CAP_ENV} if this size is really intended"
        )

    odd_roots = [rs.basis[i].weight for i in rs.odd_e_idx]

    subsets: list[tuple[int, ...]] = []
    for size in range(d + 1):
        subsets.extend(combinations(range(d), size))
    index: dict[tuple[tuple[int, ...], int], int] = {}
    basis: list[tuple[str, Weight, int]] = []
    creation: list[tuple[int, ...]] = []
    for S in subsets:
        drop = Weight.zero(alg)
        for p in S:
            drop = drop + odd_roots[p]
        for k in range(top.dim):
            index[(S, k)] = len(basis)
            wt = top.weight(k) - drop
            tag = ",".join(str(p + 1) for p in S)
            basis.append((f"f[{tag}]w{k}" if S else f"w{k}", wt, len(S) % 2))
            creation.append(tuple(flist[p] for p in S) + top.creation[k])

    odd_f_pos = {fi: p for p, fi in enumerate(flist)}
    memo: dict[tuple[int, tuple[int, ...], int], Vec] = {}

    def prepend(p: int, S: tuple[int, ...], k: int, out: Vec, c: Q) -> None:
        if p in S:
            return
        before = sum(1 for t in S if t < p)
        sign = Q(-1) if before % 2 else Q(1)
        S2 = tuple(sorted((*S, p)))
        key = index[(S2, k)]
        val = out.get(key, Q(0)) + sign * c
        if val:
            out[key] = val
        else:
            out.pop(key, None)

    def act(x: int, S: tuple[int, ...], k: int) -> Vec:
        b = rs.basis[x]
        if b.role == "cartan":
            wt = basis[index[(S, k)]][1]
            val = rs.cartan_pairing(wt, b.matrix)
            return {index[(S, k)]: val} if val else {}
        if x in odd_f_pos:
            out: Vec = {}
            prepend(odd_f_pos[x], S, k, out, Q(1))
            return out
        key = (x, S, k)
        hit = memo.get(key)
        if hit is not None:
            return hit
        out = {}
        if not S:
            if b.parity == 0:
                col = top.actions[x].get(k, {})
                for j, c in col.items():
                    out[index[((), j)]] = c
            # odd raising kills the top level
        else:
            s1, rest = S[0], S[1:]
            for y, c in rs.bracket(x, flist[s1]).items():
                _axpy(out, act(y, rest, k), c)
            sgn = Q(-1) if b.parity else Q(1)
            for pos, c in act(x, rest, k).items():
                S2, k2 = tags[pos]
                prepend(s1, S2, k2, out, sgn * c)
        memo[key] = out
        return out

    tags = list(index)
    actions: dict[int, dict[int, Vec]] = {}
    for x in range(rs.dim):
        col: dict[int, Vec] = {}
        for (S, k), pos in index.items():
            img = act(x, S, k)
            if img:
                col[pos] = img
        actions[x] = col

    hw_index = index[((), top.hw_index)]
    return SuperModule(alg, "kac", rs, basis, actions, hw_index, creation)


# ---------------------------------------------------------------------------
# irreducibles: contravariant radical quotients
# ---------------------------------------------------------------------------


def _omega_map(rs: RootSystem) -> dict[int, tuple[Q, int]]:
    """The antiautomorphism x -> P x^T P on the frozen basis.

    Returns per index a (coefficient, partner index) pair; Cartans map to
    themselves, raising vectors to multiples of lowering vectors and back.
    """
    size = rs.size
    signs = [Q(1)] * size
    if rs.alg.family == FAMILY_OSPC:
        signs[1] = Q(-1)
    out: dict[int, tuple[Q, int]] = {}
    for idx, b in enumerate(rs.basis):
        m = tuple(
            tuple(signs[r] * signs[c] * b.matrix[c][r] for c in range(size))
            for r in range(size)
        )
        dec = rs.decompose(m)
        assert len(dec) == 1, f"omega scatters basis element {b.name}"
        (j, c), = dec.items()
        roles = {b.role, rs.basis[j].role}
        assert roles in ({"cartan"}, {"e", "f"}), "omega mixes roles"
        out[idx] = (c, j)
    return out


class _ModuleForm:
    """Contravariant form on a module built from creation words."""

    def __init__(self, mod: SuperModule):
        self.mod = mod
        self.omega = _omega_map(mod.rs)
        self._cache: dict[tuple[int, int], Q] = {}

    def value(self, a: int, b: int) -> Q:
        key = (a, b)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        vec: Vec = {b: Q(1)}
        for x in self.mod.creation[a]:
            c, xi = self.omega[x]
            vec = self.mod.act(xi, vec)
            if c != 1:
                vec = {r: c * v for r, v in vec.items()}
            if not vec:
                break
        val = vec.get(self.mod.hw_index, Q(0))
        self._cache[key] = val
        return val


def build_irreducible(alg: AlgebraSpec, mu: Weight, max_dim: int | None = None) -> SuperModule:
    """The irreducible quotient of the Kac module of highest weight ``mu``:
    contravariant-form radical removed weight space by weight space."""
    big = build_kac_module(alg, mu, max_dim=max_dim)
    form = _ModuleForm(big)

    spaces = big.weight_spaces()
    echelons: dict[Weight, RowEchelon] = {}
    selected: dict[Weight, list[int]] = {}
    for wt, idxs in spaces.items():
        ech = RowEchelon(len(idxs))
        sel: list[int] = []
        for a in idxs:
            row = [form.value(a, b) for b in idxs]
            if ech.add(row):
                sel.append(a)
        echelons[wt] = ech
        selected[wt] = sel

    new_index: dict[int, int] = {}
    basis: list[tuple[str, Weight, int]] = []
    creation: list[tuple[int, ...]] = []
    for old in sorted(i for sel in selected.values() for i in sel):
        new_index[old] = len(basis)
        label, wt, par = big.basis[old]
        basis.append((label, wt, par))
        creation.append(big.creation[old])

    def project(vec: Vec, wt: Weight) -> Vec:
        idxs = spaces.get(wt)
        if not idxs:
            assert not vec, "image landed outside the module's weights"
            return {}
        sel = selected[wt]
        pairing = []
        for b in idxs:
            val = Q(0)
            for r, c in vec.items():
                val += c * form.value(b, r)
            pairing.append(val)
        if not sel:
            assert not any(pairing), "radical block received a nonzero image"
            return {}
        coeffs = echelons[wt].coords(pairing)
        assert coeffs is not None
        out: Vec = {}
        for pos, a in enumerate(idxs):
            if coeffs[pos]:
                assert a in new_index, "coefficient on a radical vector"
                out[new_index[a]] = coeffs[pos]
        return out

    actions: dict[int, dict[int, Vec]] = {}
    for x in sorted(big.actions):
        root = big.rs.basis[x].weight
        col: dict[int, Vec] = {}
        for old, new in new_index.items():
            img = big.actions[x].get(old)
            if not img:
                continue
            wt = big.weight(old) + root
            proj = project(img, wt)
            if proj:
                col[new] = proj
        actions[x] = col

    quotient = SuperModule(
        alg, "irreducible", big.rs, basis, actions, new_index[big.hw_index], creation
    )
    return quotient


# ---------------------------------------------------------------------------
# highest-weight multiplicities for the even part
# ---------------------------------------------------------------------------


def multiplicity_of_g0_hw(mod: SuperModule, nu: Weight) -> int:
    """Number of independent vectors of weight ``nu`` killed by every even
    simple raising operator."""
    idxs = mod.weight_space(nu)
    if not idxs:
        return 0
    pos = {a: t for t, a in enumerate(idxs)}
    rows: dict[tuple[int, int], list[Q]] = {}
    for e_idx, _ in mod.rs.g0_simple_pairs():
        col = mod.actions[e_idx]
        for a in idxs:
            img = col.get(a)
            if not img:
                continue
            for r, c in img.items():
                key = (e_idx, r)
                if key not in rows:
                    rows[key] = [Q(0)] * len(idxs)
                rows[key][pos[a]] = c
    ech = RowEchelon(len(idxs))
    for key in sorted(rows):
        ech.add(rows[key])
    return len(idxs) - ech.rank
