"""Law suites, witness searches, and demos behind the service endpoints.

Every function here is deterministic given its parameters (including the
seed) and returns a plain JSON-serializable dict, so two runs with the same
config produce byte-identical reports.
"""

from __future__ import annotations

import random
import re
from typing import Optional, Sequence

from . import bounded, category, nonuniform, presented, ramsey, words
from .reports import LawReport, suite_report
from .spaces import (
    CoherentSpace,
    SpaceError,
    all_spaces,
    alpha,
    cliques,
    complete,
    cycle,
    discrete,
    disjoint_kn,
    dual,
    mk_space,
    omega,
    path,
    plus,
    random_space,
    tensor,
)

MAX_EXHAUSTIVE_N = 5
MAX_RANDOM_N = 10


# -- space expressions --------------------------------------------------------

_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_-]*|\d+|[(),])")

_NULLARY = {
    "complete": complete,
    "discrete": discrete,
    "path": path,
    "cycle": cycle,
    "disjoint-kn": disjoint_kn,
    "disjoint_kn": disjoint_kn,
}
_UNARY = {"dual": dual}
_BINARY = {"tensor": tensor, "plus": plus}


def parse_space_expr(expr: str) -> CoherentSpace:
    """Tiny expression language for named constructions, e.g.
    ``dual(tensor(complete(2), discrete(3)))``."""
    tokens = []
    pos = 0
    while pos < len(expr):
        m = _TOKEN.match(expr, pos)
        if not m:
            raise SpaceError(f"bad space expression near {expr[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    idx = 0

    def expect(t: str) -> None:
        nonlocal idx
        if idx >= len(tokens) or tokens[idx] != t:
            raise SpaceError(f"expected {t!r} in space expression")
        idx += 1

    def parse() -> CoherentSpace:
        nonlocal idx
        if idx >= len(tokens):
            raise SpaceError("unexpected end of space expression")
        name = tokens[idx]
        idx += 1
        expect("(")
        if name in _NULLARY:
            arg = tokens[idx]
            idx += 1
            if not arg.isdigit():
                raise SpaceError(f"{name} takes an integer size")
            result = _NULLARY[name](int(arg))
        elif name in _UNARY:
            result = _UNARY[name](parse())
        elif name in _BINARY:
            first = parse()
            expect(",")
            second = parse()
            result = _BINARY[name](first, second)
        else:
            raise SpaceError(f"unknown space constructor {name!r}")
        expect(")")
        return result

    result = parse()
    if idx != len(tokens):
        raise SpaceError("trailing tokens in space expression")
    return result


def space_info(expr: str) -> dict:
    c = parse_space_expr(expr)
    return {
        "suite": "space",
        "params": {"expr": expr},
        "space": c.to_json_dict(),
        "web_size": c.n,
        "omega": omega(c),
        "alpha": alpha(c),
        "dot": c.to_dot(),
        "pass": True,
    }


# -- laws ---------------------------------------------------------------------

def _space_witness(c: CoherentSpace, extra: dict) -> dict:
    return {"space": c.to_json_dict(), **extra}


def laws_suite(max_n: int = 5, m: int = 1, k: int = 1, seed: int = 0,
               cases: int = 100) -> dict:
    """Exhaustive small-graph sweeps for the two exact dual laws plus the
    seeded random suite for the bounded incoherence laws."""
    max_n = min(max_n, MAX_EXHAUSTIVE_N)
    results: list[LawReport] = []

    graphs = 0
    closure_witness = None
    dual_law_witness = None
    for n in range(1, max_n + 1):
        for c in all_spaces(n):
            graphs += 1
            fam = cliques(c)
            if closure_witness is None:
                if bounded.closure_m(fam, 1).members != fam.members:
                    closure_witness = _space_witness(c, {"law_part": "closure"})
            if dual_law_witness is None:
                lhs = bounded.dual_m(fam, 1).members
                rhs = cliques(dual(c)).members
                if lhs != rhs:
                    dual_law_witness = _space_witness(c, {"law_part": "dual"})
    results.append(LawReport(
        law="coherent-closure-exactness",
        params={"max_n": max_n, "m": 1, "graphs_checked": graphs,
                "note": bounded.THRESHOLD_NOTE},
        passed=closure_witness is None and dual_law_witness is None,
        witness=closure_witness or dual_law_witness,
    ))

    dual_witness = None
    for n in range(1, max_n + 1):
        for c in all_spaces(n):
            rep = bounded.check_clique_dual_law(c, m)
            if not rep.passed:
                dual_witness = _space_witness(c, rep.witness or {})
                break
        if dual_witness:
            break
    results.append(LawReport(
        law="clique-dual-exactness",
        params={"max_n": max_n, "m": m, "graphs_checked": graphs,
                "note": bounded.THRESHOLD_NOTE},
        passed=dual_witness is None,
        witness=dual_witness,
    ))

    rng = random.Random(seed)
    closure_fail = None
    for _ in range(cases):
        n = rng.randint(1, MAX_RANDOM_N)
        c = random_space(n, rng)
        rep = bounded.check_incoherence_closure_laws(c, k, rng)
        if not rep.passed and closure_fail is None:
            closure_fail = _space_witness(c, rep.witness or {})
    results.append(LawReport(
        law="bounded-incoherence-closure-laws",
        params={"k": k, "cases": cases, "seed": seed,
                "max_random_n": MAX_RANDOM_N, "note": bounded.THRESHOLD_NOTE},
        passed=closure_fail is None,
        witness=closure_fail,
    ))

    return suite_report("laws", {"max_n": max_n, "m": m, "k": k,
                                 "seed": seed, "cases": cases}, results)


# -- ramsey -------------------------------------------------------------------

def ramsey_upper_info(sizes: Sequence[int]) -> dict:
    value = ramsey.ramsey_upper(sizes)
    return {"suite": "ramsey-upper", "params": {"sizes": list(sizes)},
            "value": value, "pass": True}


def ramsey_exact_suite(sizes: Sequence[int], budget: int = 6) -> dict:
    res = ramsey.ramsey_exact(sizes, budget)
    return {
        "suite": "ramsey-exact",
        "params": {"sizes": list(sizes), "budget": budget},
        "value": res.value,
        "lower_bound_coloring": (
            None if res.lower_bound_coloring is None
            else res.lower_bound_coloring.to_json_dict()),
        "pass": True,
    }


def ramsey_find_suite(sizes: Sequence[int], n: int, seed: int = 0,
                      colors: int = 2) -> dict:
    """Witness extraction on a seeded random coloring of K_n."""
    rng = random.Random(seed)
    coloring = ramsey.EdgeColoring.from_function(
        n, colors, lambda u, v: rng.randrange(colors))
    w = ramsey.find_mono(coloring, sizes)
    found = w is not None
    verified = bool(w and w.verify(coloring))
    at_bound = n >= ramsey.ramsey_upper(sizes)
    return {
        "suite": "ramsey-find",
        "params": {"sizes": list(sizes), "n": n, "seed": seed,
                   "colors": colors,
                   "upper_bound": ramsey.ramsey_upper(sizes)},
        "coloring": coloring.to_json_dict(),
        "witness": None if w is None else w.to_json_dict(),
        "pass": (verified if found else not at_bound),
    }


# -- functor ------------------------------------------------------------------

def _random_relation(rng, src: CoherentSpace, tgt: CoherentSpace,
                     prob: float = 0.4) -> category.Relation:
    pairs = frozenset((a, b) for a in src.web for b in tgt.web
                      if rng.random() < prob)
    return category.Relation(src.web, tgt.web, pairs)


def functor_suite(cases: int = 100, seed: int = 0, k: int = 2) -> dict:
    results: list[LawReport] = []
    rng = random.Random(seed)

    # composition / identity / associativity on random relation triples
    witness = None
    for _ in range(cases):
        sizes = [rng.randint(1, 3) for _ in range(4)]
        spaces_ = [random_space(n, rng) for n in sizes]
        s = _random_relation(rng, spaces_[0], spaces_[1])
        r = _random_relation(rng, spaces_[1], spaces_[2])
        t = _random_relation(rng, spaces_[2], spaces_[3])
        assoc = (category.compose(t, category.compose(r, s)).pairs
                 == category.compose(category.compose(t, r), s).pairs)
        idl = (category.compose(category.identity(spaces_[1].web), s).pairs
               == s.pairs
               == category.compose(s, category.identity(spaces_[0].web)).pairs)
        if not (assoc and idl) and witness is None:
            witness = {"s": s.to_json_dict(), "r": r.to_json_dict(),
                       "t": t.to_json_dict()}
    results.append(LawReport(
        law="relation-category-laws",
        params={"cases": cases, "seed": seed},
        passed=witness is None, witness=witness))

    # exhaustive: every clique-sense morphism between 2-point spaces is a
    # bounded morphism at k = 1
    witness = None
    checked = 0
    two_point = [discrete(2), complete(2)]
    for c in two_point:
        for d in two_point:
            universe = [(a, b) for a in c.web for b in d.web]
            for bits in range(1 << len(universe)):
                pairs = frozenset(p for i, p in enumerate(universe)
                                  if (bits >> i) & 1)
                r = category.Relation(c.web, d.web, pairs)
                if category.is_coh_morphism(c, d, r):
                    checked += 1
                    if not category.is_finbounded_morphism(c, d, r, 1):
                        witness = {"relation": r.to_json_dict()}
    results.append(LawReport(
        law="clique-morphisms-are-bounded-at-1",
        params={"web_size": 2, "exhaustive": True,
                "coh_morphisms_checked": checked},
        passed=witness is None, witness=witness))

    # non-fullness witness on the discrete 2-point space
    w = category.non_fullness_witness(discrete(2), discrete(2), k)
    results.append(LawReport(
        law="non-fullness-witness",
        params={"space": "discrete(2)", "k": k},
        passed=w is not None,
        witness=None if w is None else {"relation": w.to_json_dict()}))

    return suite_report("functor", {"cases": cases, "seed": seed, "k": k},
                        results)


# -- bang ---------------------------------------------------------------------

def bang_suite(n_max: int = 8, degree: int = 4) -> dict:
    """Exponential-web counting table for K_n versus its dual."""
    results: list[LawReport] = []
    rows = []
    witness = None
    for n in range(1, n_max + 1):
        kn = complete(n)
        count_kn = len(category.bang_web_set(kn))
        count_dual = len(category.bang_web_set(dual(kn)))
        rows.append({"n": n, "set_bang_kn": count_kn,
                     "set_bang_dual_kn": count_dual,
                     "expected": [2 ** n, n + 1]})
        if (count_kn, count_dual) != (2 ** n, n + 1) and witness is None:
            witness = rows[-1]
    results.append(LawReport(
        law="set-exponential-web-counts",
        params={"n_max": n_max},
        passed=witness is None, witness=witness))

    verdict = category.iso_witness_in_set(complete(3), dual(complete(3)),
                                          degree=degree)
    results.append(LawReport(
        law="multiset-exponential-stratified-counts",
        params={"n": 3, "degree": degree},
        passed=verdict.multiset_first_diff_degree is not None
        and not verdict.set_bang_equal,
        witness=verdict.to_json_dict()))

    report = suite_report("bang", {"n_max": n_max, "degree": degree}, results)
    report["table"] = rows
    return report


# -- presented ----------------------------------------------------------------

def presented_suite(family: str = "blocks_kn", blocks: int = 6,
                    depth: int = 50) -> dict:
    results: list[LawReport] = []
    p = presented.builtin_family(family)
    boundaries = [b * (b + 1) // 2 for b in range(1, blocks + 1)]
    profile = presented.growth_profile(p, boundaries)
    cover = presented.cover_growth(p, boundaries)
    for cert in p.certificates:
        results.append(presented.check_certificate(p, cert, depth))
    edits = [(0, 1)]
    comparison = presented.edit_comparison(
        presented.blocks_kn(), presented.blocks_kn_edge_edited(),
        boundaries, edits)
    witness = None
    for n, da, do in comparison:
        if da > len(edits) or do > len(edits):
            witness = {"n": n, "alpha_diff": da, "omega_diff": do}
            break
    results.append(LawReport(
        law="single-edit-stability",
        params={"edits": [list(e) for e in edits], "samples": boundaries},
        passed=witness is None, witness=witness))
    report = suite_report(
        "presented", {"family": family, "blocks": blocks, "depth": depth},
        results)
    report["growth_profile"] = [list(r) for r in profile]
    report["cover_growth"] = [list(r) for r in cover]
    report["edit_comparison"] = [list(r) for r in comparison]
    return report


# -- nonuniform ---------------------------------------------------------------

def nonuniform_suite(k: int = 2, max_n: int = 4, seed: int = 0,
                     cases: int = 50, s: int = 3) -> dict:
    results: list[LawReport] = []

    for cm in nonuniform.MODES:
        for fm in nonuniform.MODES:
            results.append(nonuniform.failure_witness(
                nonuniform.Variant(cm, fm), max_n, k))

    # embed commutes with duality, exhaustively on small graphs
    witness = None
    for n in range(1, 4):
        for c in all_spaces(n):
            lhs = nonuniform.dual_nu(nonuniform.embed_coherent(c))
            rhs = nonuniform.embed_coherent(dual(c))
            if lhs != rhs:
                witness = {"space": c.to_json_dict()}
                break
        if witness:
            break
    results.append(LawReport(
        law="embed-commutes-with-duality",
        params={"max_n": 3, "exhaustive": True},
        passed=witness is None, witness=witness))

    # trichotomy extraction at the three-color bound on random labelings
    rng = random.Random(seed)
    bound = ramsey.ramsey_upper((s, s, s))
    witness = None
    for _ in range(cases):
        nu = nonuniform.random_nonuniform(bound, rng)
        res = nonuniform.trichotomy_extract(nu, nu.web, s)
        if res.kind == "small" and witness is None:
            witness = {"space": nu.to_json_dict()}
    results.append(LawReport(
        law="three-color-trichotomy-at-bound",
        params={"s": s, "bound": bound, "cases": cases, "seed": seed},
        passed=witness is None, witness=witness))

    return suite_report(
        "nonuniform",
        {"k": k, "max_n": max_n, "seed": seed, "cases": cases, "s": s},
        results)


# -- prefix separation --------------------------------------------------------

def prop21_suite(first: Sequence[dict], second: Sequence[dict]) -> dict:
    xs = [words.word_from_json(d) for d in first]
    ys = [words.word_from_json(d) for d in second]
    rep = words.separation_witness(xs, ys)
    return suite_report(
        "prop21",
        {"first_size": len(set(xs)), "second_size": len(set(ys))},
        [rep])
