"""Primitive weight graphs: closure, duality, and the stored figure fixtures.

A primitive weight graph records, for one indecomposable module, which
primitive weights derive which others.  Nodes are weights; a directed edge
``mu -> nu`` says the primitive vector of weight ``nu`` lies in the
submodule generated by the one of weight ``mu``.  Edges carry two bits of
bookkeeping lifted straight from the figures they come from:

* ``label`` is ``"e"`` when the derivation uses raising odd operators only,
  ``"f"`` for lowering odd operators only, and ``"unknown"`` when the source
  figure does not say;
* ``direct`` distinguishes a tailed arrow (no primitive weight strictly
  between the endpoints) from a plain derived-from arrow.

Nothing here derives such graphs from module structure -- that would need
composition-multiplicity data far outside this package.  The graphs of the
worked figures are shipped as data records instead, each node written as a
small expression over the named special weights, and ``validate_fixture``
replays every internal consistency check those figures admit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable, Mapping

from .atypicality import capital_lambda, mu_star
from .errors import DomainError, FixtureError, RangeError
from .weights import (
    FAMILY_SL,
    AlgebraSpec,
    Weight,
    alpha_max,
    alpha_min,
    odd_subset_representations,
    special_weight,
)

EDGE_LABELS = ("e", "f", "unknown")


# ---------------------------------------------------------------------------
# the graph itself
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GraphEdge:
    src: Weight
    dst: Weight
    label: str = "unknown"
    direct: bool = True


@dataclass(frozen=True)
class PrimitiveWeightGraph:
    """An immutable directed graph over weights of one algebra."""

    nodes: frozenset[Weight]
    edges: frozenset[GraphEdge]

    @classmethod
    def build(
        cls,
        nodes: Iterable[Weight],
        edges: Iterable[GraphEdge | tuple],
    ) -> "PrimitiveWeightGraph":
        """Validating constructor.

        Every edge must join two distinct known nodes whose difference lies
        in the integer root lattice; anything else is a DomainError.  Edges
        may be given as GraphEdge or as (src, dst[, label[, direct]]) tuples.
        """
        node_set = frozenset(nodes)
        if not node_set:
            return cls(frozenset(), frozenset())
        algs = {w.alg for w in node_set}
        if len(algs) != 1:
            raise DomainError("graph mixes weights of different algebras")
        (alg,) = algs
        out = []
        for e in edges:
            if not isinstance(e, GraphEdge):
                e = GraphEdge(*e)
            if e.label not in EDGE_LABELS:
                raise DomainError(f"edge label {e.label!r} is not one of {EDGE_LABELS}")
            if e.src not in node_set or e.dst not in node_set:
                raise DomainError(f"edge {e.src} -> {e.dst} uses a weight missing from the node set")
            if e.src == e.dst:
                raise DomainError(f"self-loop at {e.src}")
            if not _in_root_lattice(alg, e.src - e.dst):
                raise DomainError(
                    f"edge {e.src} -> {e.dst}: difference is not in the integer root lattice"
                )
            out.append(e)
        return cls(node_set, frozenset(out))

    @property
    def alg(self) -> AlgebraSpec:
        for w in self.nodes:
            return w.alg
        raise DomainError("empty graph has no algebra")

    def successors(self) -> dict[Weight, set[Weight]]:
        succ: dict[Weight, set[Weight]] = {w: set() for w in self.nodes}
        for e in self.edges:
            succ[e.src].add(e.dst)
        return succ

    def reachable_from(self, start: Weight) -> frozenset[Weight]:
        """All nodes on a directed path from ``start``, including itself."""
        if start not in self.nodes:
            raise DomainError(f"{start} is not a node of this graph")
        succ = self.successors()
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for w in frontier:
                for v in succ[w]:
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt
        return frozenset(seen)

    def sorted_nodes(self) -> list[Weight]:
        return sorted(self.nodes, key=lambda w: w.sort_key())

    def sorted_edges(self) -> list[GraphEdge]:
        return sorted(
            self.edges,
            key=lambda e: (e.src.sort_key(), e.dst.sort_key(), e.label, e.direct),
        )


def _in_root_lattice(alg: AlgebraSpec, w: Weight) -> bool:
    if any(c.denominator != 1 for c in w.coords):
        return False
    total = sum(w.coords)
    if alg.family == FAMILY_SL:
        return total == 0
    return total % 2 == 0


# ---------------------------------------------------------------------------
# closed subsets
# ---------------------------------------------------------------------------


def _betweenness_pool(S: frozenset[Weight], G: PrimitiveWeightGraph) -> set[Weight]:
    """Nodes of G lying on a directed path from S to S."""
    down: set[Weight] = set()
    up_targets = S
    for mu in S:
        down |= G.reachable_from(mu)
    # nodes that reach S: walk the reversed graph
    pred: dict[Weight, set[Weight]] = {w: set() for w in G.nodes}
    for e in G.edges:
        pred[e.dst].add(e.src)
    up: set[Weight] = set(up_targets)
    frontier = list(up_targets)
    while frontier:
        nxt = []
        for w in frontier:
            for v in pred[w]:
                if v not in up:
                    up.add(v)
                    nxt.append(v)
        frontier = nxt
    return down & up


def is_closed(S: Iterable[Weight], G: PrimitiveWeightGraph) -> bool:
    """True when no node of G outside S sits on a path between members of S."""
    sset = frozenset(S)
    if not sset <= G.nodes:
        raise DomainError("subset contains weights that are not graph nodes")
    return _betweenness_pool(sset, G) <= sset


def closure(S: Iterable[Weight], G: PrimitiveWeightGraph) -> frozenset[Weight]:
    """The least closed superset of S, by fixpoint over reachability."""
    cur = frozenset(S)
    if not cur <= G.nodes:
        raise DomainError("subset contains weights that are not graph nodes")
    while True:
        nxt = frozenset(cur | _betweenness_pool(cur, G))
        if nxt == cur:
            return cur
        cur = nxt


# ---------------------------------------------------------------------------
# duality
# ---------------------------------------------------------------------------


def _swap_label(label: str) -> str:
    if label == "e":
        return "f"
    if label == "f":
        return "e"
    return label


def inverse_graph(G: PrimitiveWeightGraph) -> PrimitiveWeightGraph:
    """Reverse all arrows, keeping the weights.

    The underlying module operation exchanges raising and lowering odd
    operators, so e/f labels trade places; directness is untouched.
    """
    return PrimitiveWeightGraph.build(
        G.nodes,
        (GraphEdge(e.dst, e.src, _swap_label(e.label), e.direct) for e in G.edges),
    )


def dual_graph(G: PrimitiveWeightGraph) -> PrimitiveWeightGraph:
    """Reverse all arrows and replace every node by its dual weight.

    Raises DomainError when some node has no defined dual (non-dominant or
    non-integral nodes, or a family without the duality map).
    """
    star: dict[Weight, Weight] = {}
    for w in G.nodes:
        try:
            star[w] = mu_star(w)
        except DomainError as exc:
            raise DomainError(f"dual graph undefined: node {w} has no dual ({exc})") from exc
    if len(set(star.values())) != len(star):
        raise DomainError("dual graph undefined: duality collapses two nodes")
    return PrimitiveWeightGraph.build(
        star.values(),
        (GraphEdge(star[e.dst], star[e.src], _swap_label(e.label), e.direct) for e in G.edges),
    )


# ---------------------------------------------------------------------------
# node expressions
# ---------------------------------------------------------------------------
#
# Fixture nodes are written in a tiny vocabulary over the named special
# weights, e.g. "mu[j]-amin" or "mu[l]+mu2[l-2]".  Index arithmetic inside
# brackets may use the fixture parameter (j or l) and the ranks n, m.


def _eval_index(expr: str, env: Mapping[str, int]) -> int:
    total, sign, tok = 0, 1, ""

    def flush() -> int:
        if not tok:
            raise DomainError(f"bad index expression {expr!r}")
        if tok.isdigit():
            return int(tok)
        if tok in env:
            return env[tok]
        raise DomainError(f"unknown symbol {tok!r} in index expression {expr!r}")

    for ch in expr.replace(" ", ""):
        if ch in "+-":
            total += sign * flush()
            sign, tok = (1 if ch == "+" else -1), ""
        else:
            tok += ch
    return total + sign * flush()


def _atom_weight(alg: AlgebraSpec, atom: str, env: Mapping[str, int]) -> Weight:
    if atom == "0":
        return Weight.zero(alg)
    if atom == "amin":
        return alpha_min(alg)
    if atom == "amax":
        return alpha_max(alg)
    if atom == "two_rho1":
        return special_weight(alg, "two_rho1")
    if atom.endswith("]") and "[" in atom:
        head, idx = atom[:-1].split("[", 1)
        k = _eval_index(idx, env)
        if head == "mu":
            return special_weight(alg, "mu_j", j=k)
        if head == "mu_plus":
            return special_weight(alg, "mu_j_plus", j=k)
        if head == "mu_minus":
            return special_weight(alg, "mu_j_minus", j=k)
        if head == "mu2":
            return special_weight(alg, "mu_ij", i=2, j=k)
    raise DomainError(f"unknown node atom {atom!r}")


def eval_node_expr(alg: AlgebraSpec, expr: str, env: Mapping[str, int]) -> Weight:
    """Evaluate a node expression such as ``mu[j]-amin`` or ``-amin``."""
    s = expr.replace(" ", "")
    total = Weight.zero(alg)
    sign, tok, depth = 1, "", 0
    for ch in s + "+":  # sentinel flushes the last atom
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch in "+-" and depth == 0:
            if tok:
                total = total + sign * _atom_weight(alg, tok, env)
            elif sign == -1:
                raise DomainError(f"dangling sign in node expression {expr!r}")
            sign = 1 if ch == "+" else -1
            tok = ""
        else:
            tok += ch
    if sign == -1:
        raise DomainError(f"dangling sign in node expression {expr!r}")
    return total


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GraphFixture:
    """One stored figure: parameter windows, node expressions, labeled edges.

    ``params`` lists (name, lo, hi) inclusive windows as index expressions;
    later windows may refer to earlier parameters, so a two-parameter family
    like 0 <= j <= l-2 <= n-3 is written (("j","0","n-3"), ("l","j+2","n-1")).
    ``requires`` is an extra rank constraint like ``"n>=2"``.  ``drop``
    removes nodes (and their edges) when the stated condition holds,
    mirroring the figures' reduced boundary cases.  ``checks`` names extra
    integrity checks replayed by validate_fixture.
    """

    name: str
    doc: str
    params: tuple[tuple[str, str, str], ...]
    requires: str | None
    nodes: tuple[tuple[str, str], ...]
    edges: tuple[tuple[str, str, str, bool], ...]
    drop: tuple[tuple[str, tuple[str, ...]], ...] = ()
    checks: tuple[tuple[str, ...], ...] = ()


_FIXTURES: dict[str, GraphFixture] = {}


def _register(fx: GraphFixture) -> None:
    _FIXTURES[fx.name] = fx


_register(
    GraphFixture(
        name="mu-n2-diamond",
        doc="Diamond over mu^(n-2) inside the Kac module topping its block: "
        "two length-two paths from mu^(n-2) down to -alpha_min.",
        params=(),
        requires="n>=2",
        nodes=(
            ("top", "mu[n-2]"),
            ("lam1", "mu[n-2]-amin"),
            ("zero", "0"),
            ("bottom", "-amin"),
        ),
        edges=(
            ("top", "lam1", "unknown", True),
            ("lam1", "bottom", "unknown", True),
            ("top", "zero", "unknown", True),
            ("zero", "bottom", "unknown", True),
        ),
        checks=(
            ("single_odd_root", "top", "lam1"),
            ("lambda_top_sum",),
        ),
    )
)

_register(
    GraphFixture(
        name="mu-j-fan",
        doc="Fan under mu^(j) in its own Kac module: the lowering chain "
        "through mu^(j)_- , the derived path through 0, and the chain "
        "through mu^(j)-amin.",
        params=(("j", "0", "n-1"),),
        requires=None,
        nodes=(
            ("mu_j", "mu[j]"),
            ("mu_j_minus", "mu_minus[j]"),
            ("mu_prev", "mu[j-1]"),
            ("zero", "0"),
            ("lam1", "mu[j]-amin"),
            ("bottom", "-amin"),
        ),
        edges=(
            ("mu_j", "mu_j_minus", "unknown", True),
            ("mu_j_minus", "mu_prev", "unknown", True),
            ("mu_j", "zero", "unknown", False),
            ("zero", "mu_prev", "unknown", False),
            ("zero", "bottom", "unknown", True),
            ("mu_j", "lam1", "unknown", True),
            ("lam1", "bottom", "unknown", True),
        ),
        drop=(("j==0", ("mu_j_minus", "mu_prev")),),
        checks=(("single_odd_root", "mu_j", "lam1"),),
    )
)

_register(
    GraphFixture(
        name="mu-j-fan-dual",
        doc="The dual of mu-j-fan, drawn over the duals of its nodes; "
        "mu^(j), mu^(j-1) and 0 are self-dual in the stored window.",
        params=(("j", "0", "n-3"),),
        requires="n>=3",
        nodes=(
            ("mu_j", "mu[j]"),
            ("mu_prev_plus", "mu_plus[j-1]"),
            ("mu_prev", "mu[j-1]"),
            ("zero", "0"),
            ("lam1_star", "mu[n-1]+mu2[j]"),
            ("top_star", "mu[n-1]"),
        ),
        edges=(
            ("mu_prev_plus", "mu_j", "unknown", True),
            ("mu_prev", "mu_prev_plus", "unknown", True),
            ("zero", "mu_j", "unknown", False),
            ("mu_prev", "zero", "unknown", False),
            ("top_star", "zero", "unknown", True),
            ("lam1_star", "mu_j", "unknown", True),
            ("top_star", "lam1_star", "unknown", True),
        ),
        drop=(("j==0", ("mu_prev_plus", "mu_prev")),),
    )
)

_register(
    GraphFixture(
        name="double-adjacent-web",
        doc="Graph under mu = mu^(l) + mu^(2,l-1), the doubly atypical "
        "weight with adjacent rows: chains through mu^(l) and on to "
        "mu^(l-2), 0 and -alpha_min.",
        params=(("l", "1", "n-3"),),
        requires="n>=4",
        nodes=(
            ("mu", "mu[l]+mu2[l-1]"),
            ("mu_l", "mu[l]"),
            ("lam1", "mu[l]+mu2[l-2]"),
            ("mu_back", "mu[l-2]"),
            ("zero", "0"),
            ("lam2", "mu[l]-amin"),
            ("bottom", "-amin"),
        ),
        edges=(
            ("mu", "mu_l", "unknown", True),
            ("mu_l", "lam1", "unknown", True),
            ("lam1", "mu_back", "unknown", True),
            ("mu_l", "zero", "unknown", False),
            ("zero", "mu_back", "e", False),
            ("zero", "bottom", "unknown", True),
            ("mu_l", "lam2", "unknown", True),
            ("lam2", "bottom", "unknown", True),
        ),
        drop=(("l==1", ("lam1", "mu_back")),),
        checks=(("single_odd_root", "mu_l", "lam2"),),
    )
)

_register(
    GraphFixture(
        name="double-split-rows",
        doc="The subgraphs recorded for mu = mu^(l) + mu^(2,j) with "
        "separated rows (j <= l-2): a main chain from mu through mu^(l) "
        "to -alpha_min plus two detached two-node chains.",
        params=(("j", "0", "n-3"), ("l", "j+2", "n-1")),
        requires="n>=4",
        nodes=(
            ("mu", "mu[l]+mu2[j]"),
            ("mu_l", "mu[l]"),
            ("mu_j", "mu[j]"),
            ("zero", "0"),
            ("lam3", "mu[l]-amin"),
            ("bottom", "-amin"),
            ("lam1", "mu[l]+mu2[j-1]"),
            ("mu_j_prev", "mu[j-1]"),
            ("lam2", "mu[l-1]+mu2[j]"),
            ("mu_l_prev", "mu[l-1]"),
        ),
        edges=(
            ("lam3", "bottom", "unknown", True),
            ("zero", "bottom", "unknown", False),
            ("mu_l", "zero", "unknown", True),
            ("mu", "mu_l", "unknown", True),
            ("mu", "mu_j", "unknown", True),
            ("lam1", "mu_j_prev", "unknown", True),
            ("lam2", "mu_l_prev", "unknown", True),
        ),
        drop=(("j==0", ("lam1", "mu_j_prev")),),
        checks=(("node_present", "lam3"),),
    )
)


def fixture_names() -> tuple[str, ...]:
    return tuple(sorted(_FIXTURES))


def fixture_record(name: str) -> GraphFixture:
    try:
        return _FIXTURES[name]
    except KeyError:
        raise DomainError(f"unknown graph fixture {name!r}; know {fixture_names()}") from None


def _check_condition(cond: str, env: Mapping[str, int]) -> bool:
    for op in (">=", "<=", "==", ">", "<"):
        if op in cond:
            left, right = cond.split(op, 1)
            a, b = _eval_index(left, env), _eval_index(right, env)
            return {
                ">=": a >= b,
                "<=": a <= b,
                "==": a == b,
                ">": a > b,
                "<": a < b,
            }[op]
    raise DomainError(f"bad condition {cond!r}")


def fixture_instances(name: str, alg: AlgebraSpec) -> list[dict[str, int]]:
    """All parameter assignments for which the fixture exists on ``alg``.

    The list is empty when the rank constraints exclude the algebra
    entirely.  Fixtures are stored for the sl family only.
    """
    fx = fixture_record(name)
    if alg.family != FAMILY_SL:
        return []
    base = {"n": alg.n, "m": alg.m}
    if fx.requires and not _check_condition(fx.requires, base):
        return []
    out: list[dict[str, int]] = [{}]
    for pname, lo_expr, hi_expr in fx.params:
        grown: list[dict[str, int]] = []
        for assign in out:
            env = {**base, **assign}
            lo, hi = _eval_index(lo_expr, env), _eval_index(hi_expr, env)
            grown.extend({**assign, pname: v} for v in range(lo, hi + 1))
        out = grown
    return out


def _instance_env(fx: GraphFixture, alg: AlgebraSpec, params: Mapping[str, int]) -> dict[str, int]:
    if alg.family != FAMILY_SL:
        raise DomainError(f"graph fixtures are defined for the sl family, not {alg.family}")
    if dict(params) not in fixture_instances(fx.name, alg):
        raise RangeError(
            f"fixture {fx.name}: no instance with parameters {dict(params)} on {alg}"
        )
    return {"n": alg.n, "m": alg.m, **params}


def fixture_node_map(name: str, alg: AlgebraSpec, **params: int) -> dict[str, Weight]:
    """Node name -> weight for one fixture instance, after boundary drops."""
    fx = fixture_record(name)
    env = _instance_env(fx, alg, params)
    dropped: set[str] = set()
    for cond, names in fx.drop:
        if _check_condition(cond, env):
            dropped.update(names)
    return {nm: eval_node_expr(alg, expr, env) for nm, expr in fx.nodes if nm not in dropped}


def build_fixture(name: str, alg: AlgebraSpec, **params: int) -> PrimitiveWeightGraph:
    """Instantiate a stored figure as a PrimitiveWeightGraph."""
    fx = fixture_record(name)
    nodes = fixture_node_map(name, alg, **params)
    edges = [
        GraphEdge(nodes[s], nodes[d], label, direct)
        for s, d, label, direct in fx.edges
        if s in nodes and d in nodes
    ]
    return PrimitiveWeightGraph.build(nodes.values(), edges)


# ---------------------------------------------------------------------------
# fixture validation
# ---------------------------------------------------------------------------


def _run_extra_check(
    check: tuple[str, ...],
    alg: AlgebraSpec,
    nodes: Mapping[str, Weight],
) -> None:
    kind = check[0]
    if kind == "node_present":
        if check[1] not in nodes:
            raise FixtureError(f"expected node {check[1]!r} missing")
        return
    if kind == "single_odd_root":
        src, dst = check[1], check[2]
        if src not in nodes or dst not in nodes:
            return  # the boundary case dropped one endpoint
        reps = odd_subset_representations(alg, nodes[src] - nodes[dst])
        if len(reps) != 1 or len(reps[0]) != 1:
            raise FixtureError(
                f"{src} - {dst} should be a single odd positive root, got subsets {reps}"
            )
        return
    if kind == "lambda_top_sum":
        # The figure's ambient Kac module is topped by the block's highest
        # weight, recovered as capital_lambda of the bottom primitive weight
        # -alpha_min.  It must match both the stated closed form and the
        # telescoping sum of the anti-diagonal special weights.
        n, m = alg.n, alg.m
        top = capital_lambda(-alpha_min(alg))
        closed = Weight(alg, (Q(n - 1),) * (m - 1) + (Q(0), Q(0)) + (Q(1 - m),) * (n - 1))
        total = Weight.zero(alg)
        for i in range(1, n):
            total = total + special_weight(alg, "mu_ij", i=i, j=n - 1 - i)
        if top != closed or top != total:
            raise FixtureError(
                f"block-top identity failed: Lambda={top}, closed form {closed}, sum {total}"
            )
        return
    raise DomainError(f"unknown fixture check {check!r}")


def validate_fixture(name: str, max_m: int = 5, max_n: int = 4) -> dict:
    """Replay every stored integrity check of one fixture.

    Sweeps all sl(m|n) with n <= max_n, n <= m <= max_m and every parameter
    value in the stored window.  Checks per instance: the graph invariants
    (via the validating constructor), dominance of every node, the e/f
    label semantics (an ``e`` edge's target minus source, or an ``f``
    edge's source minus target, must be a sum of distinct positive odd
    roots), and the fixture's extra checks.  Raises FixtureError on any
    failure; returns a summary report otherwise.
    """
    fx = fixture_record(name)
    instances = 0
    nodes_checked = 0
    label_checks = 0
    extra_checks = 0
    for n in range(1, max_n + 1):
        for m in range(n, max_m + 1):
            alg = AlgebraSpec(FAMILY_SL, m, n)
            for params in fixture_instances(name, alg):
                nodes = fixture_node_map(name, alg, **params)
                graph = build_fixture(name, alg, **params)  # runs edge invariants
                instances += 1
                for nm, w in nodes.items():
                    nodes_checked += 1
                    if not w.is_dominant():
                        raise FixtureError(
                            f"{name} on {alg} {params}: node {nm} = {w} is not dominant"
                        )
                by_weight = {w: nm for nm, w in nodes.items()}
                for e in graph.edges:
                    if e.label == "unknown":
                        continue
                    diff = (e.dst - e.src) if e.label == "e" else (e.src - e.dst)
                    if not odd_subset_representations(alg, diff):
                        raise FixtureError(
                            f"{name} on {alg} {params}: edge "
                            f"{by_weight[e.src]} -{e.label}-> {by_weight[e.dst]} is not a "
                            "sum of distinct positive odd roots in the labelled direction"
                        )
                    label_checks += 1
                for check in fx.checks:
                    _run_extra_check(check, alg, nodes)
                    extra_checks += 1
    return {
        "fixture": name,
        "family": FAMILY_SL,
        "max_m": max_m,
        "max_n": max_n,
        "instances": instances,
        "nodes_checked": nodes_checked,
        "label_checks": label_checks,
        "extra_checks": extra_checks,
        "ok": True,
    }


def validate_all_fixtures(max_m: int = 5, max_n: int = 4) -> list[dict]:
    return [validate_fixture(name, max_m, max_n) for name in fixture_names()]
