"""The ``supercoh`` command-line tool.

Deterministic text and JSON reports over the library: the atypicality data
of a single weight, the closed-form cohomology classifications, the finite
weight enumerations, the exact finite-dimensional oracle, the stored
weight-graph fixtures, and a ``selfcheck`` that replays the bundled
examples end to end.

Text mode mirrors the printed tables: the atypicality matrix carries the
even Dynkin labels on the left margin (between the rows) and the odd ones
below (between the columns), and negative entries wear a digit-wise
overbar.  JSON mode is key-sorted with plain integers, so identical
invocations produce byte-identical documents.

Exit codes: 0 success; 2 argument or weight-grammar errors; 3 domain
errors (wrong family, parameter window, non-dominant input); 4 resource
bounds; 5 selfcheck mismatches.
"""

from __future__ import annotations

import argparse
import json
import sys
import unicodedata

from .atypicality import FAMILY_KINDS, build_report, enumerate_family, mu_star
from .classifier import (
    enumerate_h2_irr,
    enveloping_answers,
    h1_irr,
    h1_kac,
    h2_irr,
    h2_kac,
)
from .errors import DomainError, FixtureError, ParseError, ResourceError
from .oracle import (
    COCYCLE_KINDS,
    build_irreducible,
    build_kac_module,
    build_named_cocycle,
    cohomology_dims,
    pbw_ad_witness,
    verify_cocycle,
)
from .pwgraph import (
    build_fixture,
    fixture_names,
    fixture_node_map,
    fixture_record,
    validate_fixture,
)
from .weights import (
    FAMILY_OSPC,
    FAMILY_SL,
    AlgebraSpec,
    Weight,
    alpha_max,
    alpha_min,
    special_weight,
)

# ---------------------------------------------------------------------------
# table typography
# ---------------------------------------------------------------------------

_OVERBAR = "̅"


def _bar_num(x) -> str:
    """Negative integers wear a digit-wise overbar, as in the printed
    tables; anything non-integral falls back to its plain form."""
    if getattr(x, "denominator", 1) != 1:
        return str(x)
    k = int(x)
    if k >= 0:
        return str(k)
    return "".join(ch + _OVERBAR for ch in str(-k))


def _width(s: str) -> int:
    return sum(1 for ch in s if not unicodedata.combining(ch))


def _rpad(s: str, width: int) -> str:
    return " " * max(width - _width(s), 0) + s


def _matrix_lines(cells: list[list[str]], row_labels: list[str], col_labels: list[str]) -> list[str]:
    """Lay out a matrix the way the appendix prints them: the row labels sit
    on the left margin in between the rows, the column labels underneath in
    between the columns."""
    cw = max((_width(c) for row in cells for c in row), default=1) + 2
    margin = max((_width(lab) for lab in row_labels), default=0) + 2
    out = []
    for i, row in enumerate(cells):
        out.append(" " * margin + "".join(_rpad(c, cw) for c in row))
        if i < len(row_labels):
            out.append(_rpad(row_labels[i], margin - 1))
    if col_labels and cells:
        canvas = [" "] * (margin + cw * len(cells[0]) + 2)
        for nu, lab in enumerate(col_labels):
            x = margin + cw * (nu + 1) + cw // 2 - 1 - (_width(lab) - 1) // 2
            for t, ch in enumerate(lab):
                if 0 <= x + t < len(canvas):
                    canvas[x + t] = ch
        out.append("")
        out.append("".join(canvas).rstrip())
    return out


def _pos(p) -> str:
    return f"({p[0]},{p[1]})"


# ---------------------------------------------------------------------------
# shared argument plumbing
# ---------------------------------------------------------------------------


def _algebra(args) -> AlgebraSpec:
    family = args.family
    if args.n is None:
        raise ParseError("--n is required")
    if family == FAMILY_SL:
        if args.m is None:
            raise ParseError("--m is required for the sl family")
        return AlgebraSpec(FAMILY_SL, args.m, args.n)
    if args.m not in (None, 2):
        raise DomainError("family 'ospc' fixes m = 2")
    return AlgebraSpec(FAMILY_OSPC, 2, args.n)


def _weight(alg: AlgebraSpec, args) -> Weight:
    if args.weight is not None and args.dynkin is not None:
        raise ParseError("pass exactly one of --weight/--dynkin")
    if args.weight is not None:
        return Weight.parse(alg, args.weight)
    if args.dynkin is not None:
        return Weight.parse_dynkin(alg, args.dynkin)
    raise ParseError("one of --weight/--dynkin is required here")


def _parse_params(raw: str | None) -> dict[str, int]:
    if not raw:
        return {}
    out: dict[str, int] = {}
    for bit in raw.split(","):
        bit = bit.strip()
        if not bit:
            continue
        name, eq, val = bit.partition("=")
        name = name.strip()
        if not eq or not name:
            raise ParseError(f"--params wants name=value pairs, got {bit!r}")
        try:
            out[name] = int(val)
        except ValueError:
            raise ParseError(f"--params value for {name!r} is not an integer: {val!r}") from None
    return out


# ---------------------------------------------------------------------------
# atyp
# ---------------------------------------------------------------------------


def cmd_atyp(args) -> tuple[dict, list[str]]:
    alg = _algebra(args)
    mu = _weight(alg, args)
    report = build_report(mu)
    r = len(report.atypical_roots)

    payload = report.to_dict()
    payload["algebra"] = str(alg)
    payload["dynkin"] = mu.dynkin_text()
    payload["degree_of_atypicality"] = r
    payload["typical"] = r == 0

    evens, _, odds = mu.dynkin_labels()
    row_labels = [_bar_num(x) for x in evens]
    col_labels = [_bar_num(x) for x in odds]

    lines = [
        f"algebra: {alg}",
        f"mu = ({mu})",
        f"dynkin = {mu.dynkin_text()}",
        f"degree of atypicality: {r}",
    ]
    if report.atypical_roots:
        lines.append(
            "atypical roots: "
            + ", ".join(f"gamma_{t + 1} = {_pos(p)}" for t, p in enumerate(report.atypical_roots))
        )
    lines += ["", "A(mu):"]
    lines += _matrix_lines([[_bar_num(x) for x in row] for row in report.matrix], row_labels, col_labels)

    if r == 0:
        lines += ["", "typical; Λ_μ = μ"]
        return payload, lines

    # mark every chain position with the index of the chain through it
    owner: dict[tuple[int, int], int] = {}
    for t in range(r):
        for p in (*report.east_chains[t], *report.north_chains[t]):
            owner.setdefault(tuple(p), t + 1)
    ne_cells = [
        [str(owner[(i, h)]) if (i, h) in owner else "*" for h in range(1, alg.n + 1)]
        for i in range(1, alg.m + 1)
    ]
    lines += ["", "NE_mu (positions numbered by their chain):"]
    lines += _matrix_lines(ne_cells, row_labels, col_labels)

    lines += ["", "nqc(mu):"]
    for row in [*report.nqc[::-1], []]:
        lines.append("  " + " ".join([*row, "0"]))

    lines += ["", "east chains:"]
    for t, chain in enumerate(report.east_chains):
        lines.append(f"  gamma_{t + 1}: " + " -> ".join(_pos(p) for p in chain))
    lines += ["", "north chains:"]
    for t, chain in enumerate(report.north_chains):
        lines.append(f"  gamma_{t + 1}: " + " -> ".join(_pos(p) for p in chain))
    lines += ["", "P_mu: " + (" ".join(_pos(p) for p in report.p_mu) or "(empty)")]
    lines += ["", f"Λ_μ = ({report.lambda_mu})"]
    return payload, lines


# ---------------------------------------------------------------------------
# classify / enumerate / families
# ---------------------------------------------------------------------------

_CLASSIFY = {
    "h1-kac": h1_kac,
    "h2-kac": h2_kac,
    "h1-irr": h1_irr,
    "h2-irr": h2_irr,
}

_COEFF_TEXT = {
    "kac": "Kac module",
    "irreducible": "irreducible module",
    "enveloping": "enveloping algebra",
}


def _answer_lines(alg: AlgebraSpec, ans, w: Weight | None) -> list[str]:
    at = f" at ({w})" if w is not None else ""
    out = [
        f"H^{ans.degree} of {alg} with {_COEFF_TEXT[ans.coefficient_kind]} coefficients{at}:",
        f"dimension {ans.dimension}",
    ]
    if ans.witness_kind:
        out.append(f"witness: {ans.witness_kind}")
    return out


def cmd_classify(args) -> tuple[dict, list[str]]:
    alg = _algebra(args)
    if args.what == "enveloping":
        h1, h2 = enveloping_answers(alg)
        payload = {
            "algebra": str(alg),
            "what": args.what,
            "answers": [h1.to_dict(), h2.to_dict()],
        }
        return payload, _answer_lines(alg, h1, None) + _answer_lines(alg, h2, None)
    w = _weight(alg, args)
    ans = _CLASSIFY[args.what](alg, w)
    payload = {
        "algebra": str(alg),
        "what": args.what,
        "weight": str(w),
        "answer": ans.to_dict(),
    }
    return payload, _answer_lines(alg, ans, w)


def cmd_enumerate(args) -> tuple[dict, list[str]]:
    alg = _algebra(args)
    weights = enumerate_h2_irr(alg)
    payload = {
        "algebra": str(alg),
        "what": args.what,
        "count": len(weights),
        "weights": [str(w) for w in weights],
    }
    lines = [f"weights with one-dimensional degree-two cohomology on {alg}:"]
    lines += [f"  ({w})" for w in weights]
    lines.append(f"count {len(weights)}")
    return payload, lines


def cmd_families(args) -> tuple[dict, list[str]]:
    alg = _algebra(args)
    kind = args.what.replace("-", "_")
    weights = enumerate_family(alg, kind, l=args.l)
    payload = {
        "algebra": str(alg),
        "what": args.what,
        "l": args.l,
        "count": len(weights),
        "weights": [str(w) for w in weights],
    }
    head = f"family {args.what} on {alg}"
    if args.l is not None:
        head += f" at l={args.l}"
    lines = [head + ":"]
    lines += [f"  ({w})" for w in weights]
    lines.append(f"count {len(weights)}")
    return payload, lines


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------


def cmd_oracle(args) -> tuple[dict, list[str]]:
    alg = _algebra(args)
    if args.what == "pbw":
        el = pbw_ad_witness(alg, max_odd=args.max_odd)
        payload = {
            "algebra": str(alg),
            "what": args.what,
            "nonzero": not el.is_zero(),
            "terms": len(el.terms),
            "degree": el.degree,
            "element": el.render(),
        }
        lines = [
            f"pbw witness on {alg}: "
            + ("nonzero" if not el.is_zero() else "ZERO")
            + f", {len(el.terms)} terms, top degree {el.degree}",
            el.render(),
        ]
        return payload, lines

    w = _weight(alg, args)
    if args.what in ("kac-dims", "irr-dims"):
        build = build_kac_module if args.what == "kac-dims" else build_irreducible
        mod = build(alg, w, max_dim=args.max_dim)
        dims = cohomology_dims(
            alg,
            mod,
            args.pmax,
            max_dim=args.max_dim,
            invariant_reduction=args.invariant_reduction == "on",
        )
        payload = {
            "algebra": str(alg),
            "what": args.what,
            "weight": str(w),
            "module_dim": mod.dim,
            "pmax": args.pmax,
            "invariant_reduction": args.invariant_reduction == "on",
            "dims": dims,
        }
        kind = "Kac" if args.what == "kac-dims" else "irreducible"
        lines = [f"{kind} coefficients at ({w}) on {alg}: module dimension {mod.dim}"]
        lines += [f"H^{p} = {d}" for p, d in enumerate(dims)]
        return payload, lines

    # a named cocycle
    build = build_irreducible if args.what.startswith("phi1") else build_kac_module
    mod = build(alg, w, max_dim=args.max_dim)
    phi = build_named_cocycle(args.what, alg, w, module=mod)
    rep = verify_cocycle(phi)
    payload = {
        "algebra": str(alg),
        "what": args.what,
        "weight": str(w),
        "degree": phi.degree,
        "is_cocycle": rep["is_cocycle"],
        "is_coboundary": rep["is_coboundary"],
    }
    lines = [
        f"cocycle {args.what} at ({w}) on {alg}: degree {phi.degree}",
        f"is_cocycle: {str(rep['is_cocycle']).lower()}",
        f"is_coboundary: {str(rep['is_coboundary']).lower()}",
    ]
    return payload, lines


# ---------------------------------------------------------------------------
# graph
# ---------------------------------------------------------------------------


def cmd_graph(args) -> tuple[dict, list[str]]:
    if args.what == "list":
        records = []
        lines = []
        for name in fixture_names():
            fx = fixture_record(name)
            records.append(
                {
                    "name": name,
                    "doc": fx.doc,
                    "params": [list(p) for p in fx.params],
                    "requires": fx.requires,
                }
            )
            window = ", ".join(f"{p} in [{lo}, {hi}]" for p, lo, hi in fx.params) or "none"
            lines.append(f"{name}: {fx.doc}")
            lines.append(f"  params: {window}; requires: {fx.requires or 'none'}")
        return {"fixtures": records}, lines

    if args.what == "validate":
        names = fixture_names() if args.fixture in (None, "all") else (args.fixture,)
        reports = [validate_fixture(nm, max_m=args.max_m, max_n=args.max_n) for nm in names]
        lines = [
            "ok {fixture}: instances={instances} nodes={nodes_checked} "
            "label_checks={label_checks} extra_checks={extra_checks}".format(**rep)
            for rep in reports
        ]
        lines.append(f"validated {len(reports)} fixture(s) over m <= {args.max_m}, n <= {args.max_n}")
        return {"reports": reports}, lines

    # show one instance
    if args.fixture is None:
        raise ParseError("--fixture is required with --what show")
    alg = _algebra(args)
    params = _parse_params(args.params)
    nodes = fixture_node_map(args.fixture, alg, **params)
    graph = build_fixture(args.fixture, alg, **params)
    name_of: dict[tuple, str] = {}
    for nm in sorted(nodes):
        name_of.setdefault(nodes[nm].coords, nm)
    edge_rows = sorted(
        (name_of[e.src.coords], name_of[e.dst.coords], e.label, e.direct) for e in graph.edges
    )
    payload = {
        "fixture": args.fixture,
        "algebra": str(alg),
        "params": params,
        "nodes": {nm: str(wt) for nm, wt in nodes.items()},
        "edges": [[s, d, lab, direct] for s, d, lab, direct in edge_rows],
    }
    head = f"fixture {args.fixture} on {alg}"
    if params:
        head += " with " + ", ".join(f"{k}={v}" for k, v in sorted(params.items()))
    lines = [head, "nodes:"]
    lines += [f"  {nm} = ({nodes[nm]})" for nm in sorted(nodes)]
    lines.append("edges:")
    for s, d, lab, direct in edge_rows:
        arrow = "->" if direct else "~>"
        lines.append(f"  {s} {arrow} {d}" + (f"  [{lab}]" if lab != "unknown" else ""))
    return payload, lines


# ---------------------------------------------------------------------------
# selfcheck
# ---------------------------------------------------------------------------

_A1_TEXT = "3,2,2,1,0,0|0,0,-1,-3,-4"
_A1_MATRIX = [
    [8, 7, 5, 2, 0],
    [6, 5, 3, 0, -2],
    [5, 4, 2, -1, -3],
    [3, 2, 0, -3, -5],
    [1, 0, -2, -5, -7],
    [0, -1, -3, -6, -8],
]
_A1_NQC = [["c"], ["c", "q"], ["c", "q", "q"], ["c", "q", "q", "q"]]
_A1_LAMBDA = "5,5,4,3,3,2|-2,-3,-5,-6,-6"

_A2_TEXT = "5,2,2,1,1,1|-1,-1,-1,-3,-6"
_A2_MATRIX = [
    [9, 8, 7, 4, 0],
    [5, 4, 3, 0, -4],
    [4, 3, 2, -1, -5],
    [2, 1, 0, -3, -7],
    [1, 0, -1, -4, -8],
    [0, -1, -2, -5, -9],
]
_A2_NQC = [["c"], ["c", "c"], ["c", "c", "q"], ["q", "n", "n", "n"]]
_A2_LAMBDA = "6,5,5,5,4,4|-4,-6,-6,-6,-7"

_ATYPICAL_ROOTS_65 = [(6, 1), (5, 2), (4, 3), (2, 4), (1, 5)]

_PBW_SL21 = (
    "(-1)·h1*h0 + h0 + (-1)·h0*h0 + E(1,2)*E(2,1)"
    " + (-1)·E(2,3)*E(3,2) + (-1)·E(1,3)*E(3,1)"
)


def _check_report(text: str, matrix, nqc, roots, lam: str, union_size: int):
    alg = AlgebraSpec(FAMILY_SL, 6, 5)
    rep = build_report(Weight.parse(alg, text))
    if rep.matrix != matrix:
        return f"matrix mismatch: {rep.matrix}"
    if rep.nqc != nqc:
        return f"nqc mismatch: {rep.nqc}"
    if [tuple(p) for p in rep.atypical_roots] != roots:
        return f"atypical roots mismatch: {rep.atypical_roots}"
    if str(rep.lambda_mu) != lam:
        return f"Lambda mismatch: {rep.lambda_mu}"
    if len(rep.ne_union) != union_size:
        return f"NE size {len(rep.ne_union)} != {union_size}"
    return None


def _selfcheck_checks():
    sl21 = AlgebraSpec(FAMILY_SL, 2, 1)
    sl32 = AlgebraSpec(FAMILY_SL, 3, 2)
    osp2 = AlgebraSpec(FAMILY_OSPC, 2, 2)

    def appendix_first():
        return _check_report(_A1_TEXT, _A1_MATRIX, _A1_NQC, _ATYPICAL_ROOTS_65, _A1_LAMBDA, 14)

    def appendix_second():
        return _check_report(_A2_TEXT, _A2_MATRIX, _A2_NQC, _ATYPICAL_ROOTS_65, _A2_LAMBDA, 17)

    def rank21_zero_weight():
        rep = build_report(Weight.zero(sl21))
        if rep.matrix != [[1], [0]]:
            return f"matrix mismatch: {rep.matrix}"
        if sorted(tuple(p) for p in rep.ne_union) != [(1, 1), (2, 1)]:
            return f"NE mismatch: {rep.ne_union}"
        if rep.lambda_mu.coords != special_weight(sl21, "two_rho1").coords:
            return f"Lambda mismatch: {rep.lambda_mu}"
        return None

    def degree_one_classification():
        ans = h1_irr(sl21, Weight.parse(sl21, "0,-1|1"))
        return None if ans.dimension == 1 else f"dimension {ans.dimension} != 1"

    def degree_two_counts():
        for (m, n), want in (((2, 1), 2), ((3, 2), 6), ((4, 3), 10)):
            got = len(enumerate_h2_irr(AlgebraSpec(FAMILY_SL, m, n)))
            if got != want:
                return f"count {got} != {want} on sl({m}|{n})"
        return None

    def kac_degree_one_sweep():
        two_rho1 = special_weight(sl21, "two_rho1")
        amax = alpha_max(sl21)
        lams = [Weight.zero(sl21), amax, two_rho1, two_rho1 + amax, two_rho1 + 2 * amax]
        want = [0, 0, 1, 1, 0]
        for lam, expect in zip(lams, want):
            mod = build_kac_module(sl21, lam)
            dims = cohomology_dims(sl21, mod, 1)
            stated = h1_kac(sl21, lam).dimension
            if dims[1] != expect or stated != expect:
                return f"H^1(V at ({lam})) = {dims[1]} (closed form {stated}), want {expect}"
        return None

    def irr_degree_one_quick():
        for mu in (Weight.zero(sl21), -alpha_min(sl21), special_weight(sl21, "two_rho1")):
            mod = build_irreducible(sl21, mu)
            dims = cohomology_dims(sl21, mod, 1)
            stated = h1_irr(sl21, mu).dimension
            if dims[1] != stated:
                return f"H^1(L at ({mu})) = {dims[1]} but closed form says {stated}"
        return None

    def named_cocycles():
        two_rho1 = special_weight(sl21, "two_rho1")
        amax = alpha_max(sl21)
        cases = [
            ("phi_prime_125", two_rho1),
            ("phi_18", two_rho1 + amax),
            ("phi_22", two_rho1 + amax),
            ("phi_21", two_rho1 + 2 * amax),
        ]
        for kind, lam in cases:
            rep = verify_cocycle(build_named_cocycle(kind, sl21, lam))
            if not rep["is_cocycle"] or rep["is_coboundary"]:
                return f"{kind}: {rep}"
        return None

    def pbw_witness():
        el = pbw_ad_witness(sl21)
        if el.is_zero():
            return "witness is zero"
        if el.render() != _PBW_SL21:
            return f"render drifted: {el.render()}"
        return None

    def duality_spots():
        two_rho1 = special_weight(sl21, "two_rho1")
        if mu_star(two_rho1).coords != (-alpha_min(sl21)).coords:
            return "sl(2|1): (2rho1)* != -alpha_min"
        if mu_star(-alpha_min(sl21)).coords != two_rho1.coords:
            return "sl(2|1): (-alpha_min)* != 2rho1"
        mu0 = special_weight(sl32, "mu_j", j=0)
        mu1 = special_weight(sl32, "mu_j", j=1)
        if mu_star(mu0).coords != mu0.coords:
            return "sl(3|2): mu^(0) is not self-dual"
        if mu_star(mu1).coords != (-alpha_min(sl32)).coords:
            return "sl(3|2): (mu^(1))* != -alpha_min"
        if mu_star(-alpha_min(sl32)).coords != mu1.coords:
            return "sl(3|2): (-alpha_min)* != mu^(1)"
        return None

    def osp_classification():
        listed = enumerate_h2_irr(osp2)
        want = (
            special_weight(osp2, "two_rho1") + alpha_max(osp2),
            -2 * alpha_min(osp2),
        )
        if tuple(w.coords for w in listed) != tuple(w.coords for w in want):
            return f"degree-two list mismatch: {[str(w) for w in listed]}"
        ans = h1_irr(osp2, special_weight(osp2, "two_rho1"))
        return None if ans.dimension == 1 else f"H^1 dimension {ans.dimension} != 1"

    def osp_oracle_quick():
        two_rho1 = special_weight(osp2, "two_rho1")
        mod = build_irreducible(osp2, two_rho1)
        dims = cohomology_dims(osp2, mod, 1)
        if dims[1] != 1:
            return f"H^1(L at ({two_rho1})) = {dims[1]} != 1"
        triv = build_irreducible(osp2, Weight.zero(osp2))
        dims0 = cohomology_dims(osp2, triv, 1)
        if dims0 != [1, 0]:
            return f"H^*(L at 0) = {dims0} != [1, 0]"
        return None

    def graph_fixtures():
        for name in fixture_names():
            rep = validate_fixture(name, max_m=4, max_n=3)
            if not rep["ok"]:
                return f"{name} failed"
        return None

    def family_lists():
        got = enumerate_family(sl32, "p_vee_minus_amin")
        if not got:
            return "p_vee_minus_amin on sl(3|2) came back empty"
        got = enumerate_family(sl32, "p_plus_mu_l", l=1)
        if not got:
            return "p_plus_mu_l on sl(3|2) came back empty"
        return None

    return [
        ("appendix-example-1", appendix_first),
        ("appendix-example-2", appendix_second),
        ("rank21-zero-weight", rank21_zero_weight),
        ("degree-one-classification", degree_one_classification),
        ("degree-two-counts", degree_two_counts),
        ("kac-degree-one-sweep", kac_degree_one_sweep),
        ("irr-degree-one-quick", irr_degree_one_quick),
        ("named-cocycles", named_cocycles),
        ("pbw-witness", pbw_witness),
        ("duality-spots", duality_spots),
        ("osp-classification", osp_classification),
        ("osp-oracle-quick", osp_oracle_quick),
        ("graph-fixtures", graph_fixtures),
        ("family-lists", family_lists),
    ]


def _run_selfcheck(args) -> int:
    results = []
    for name, fn in _selfcheck_checks():
        try:
            detail = fn()
        except Exception as exc:  # a crash counts as a failure, not an abort
            detail = f"raised {type(exc).__name__}: {exc}"
        results.append((name, detail))
    failures = sum(1 for _, d in results if d)
    lines = [
        (f"FAIL {name}: {detail}" if detail else f"ok   {name}")
        for name, detail in results
    ]
    lines.append(f"selfcheck: {len(results)} checks, {failures} failures")
    payload = {
        "checks": [
            {"name": name, "ok": not detail, "detail": detail or ""}
            for name, detail in results
        ],
        "failures": failures,
    }
    _emit(args, payload, lines)
    return 5 if failures else 0


# ---------------------------------------------------------------------------
# wiring
# ---------------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, with_weight: bool = True) -> None:
    p.add_argument("--family", choices=(FAMILY_SL, FAMILY_OSPC), default=FAMILY_SL)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    if with_weight:
        p.add_argument("--weight", default=None, help="coordinates, e.g. '1,0|-1'")
        p.add_argument("--dynkin", default=None, help="Dynkin labels, e.g. '[1;0;]'")


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="supercoh",
        description="Low-degree Lie superalgebra cohomology: reports, oracle, fixtures.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("atyp", help="atypicality report for one weight")
    _add_common(p)

    p = sub.add_parser("classify", help="closed-form cohomology dimensions")
    _add_common(p)
    p.add_argument("--what", choices=(*sorted(_CLASSIFY), "enveloping"), required=True)

    p = sub.add_parser("enumerate", help="the finite degree-two weight list")
    _add_common(p, with_weight=False)
    p.add_argument("--what", choices=("h2-irr",), default="h2-irr")

    p = sub.add_parser("families", help="explicit primitive-weight families")
    _add_common(p, with_weight=False)
    p.add_argument(
        "--what",
        choices=tuple(k.replace("_", "-") for k in FAMILY_KINDS),
        required=True,
    )
    p.add_argument("--l", type=int, default=None)

    p = sub.add_parser("oracle", help="exact finite-dimensional computations")
    _add_common(p)
    p.add_argument("--what", choices=("kac-dims", "irr-dims", "pbw", *COCYCLE_KINDS), required=True)
    p.add_argument("--pmax", type=int, default=2)
    p.add_argument("--max-dim", type=int, default=None)
    p.add_argument("--invariant-reduction", choices=("on", "off"), default="off")
    p.add_argument("--max-odd", type=int, default=6)

    p = sub.add_parser("graph", help="stored weight-graph fixtures")
    _add_common(p, with_weight=False)
    p.add_argument("--what", choices=("list", "show", "validate"), required=True)
    p.add_argument("--fixture", default=None)
    p.add_argument("--params", default=None, help="fixture parameters, e.g. 'j=1'")
    p.add_argument("--max-m", type=int, default=5)
    p.add_argument("--max-n", type=int, default=4)

    p = sub.add_parser("selfcheck", help="replay the bundled examples")
    p.add_argument("--format", choices=("text", "json"), default="text")

    return top


_DISPATCH = {
    "atyp": cmd_atyp,
    "classify": cmd_classify,
    "enumerate": cmd_enumerate,
    "families": cmd_families,
    "oracle": cmd_oracle,
    "graph": cmd_graph,
}


def _emit(args, payload: dict, lines: list[str]) -> None:
    if getattr(args, "format", "text") == "json":
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "selfcheck":
            return _run_selfcheck(args)
        payload, lines = _DISPATCH[args.command](args)
        _emit(args, payload, lines)
        return 0
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (DomainError, FixtureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
