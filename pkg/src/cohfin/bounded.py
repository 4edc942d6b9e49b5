"""Parametric bounded dual on set families and bounded finitely-incoherent
families.

``dual_m`` sends a family F over a web to every subset meeting each member of
F in at most m points.  m = 1 recovers the clique-closure operator; larger m
is the finite stand-in for an unbounded intersection condition (on a finite
web the literal unbounded dual is the whole powerset, which trivializes every
law, so all checks here are stated at explicit thresholds).
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional

from .reports import LawReport
from .spaces import (
    DEFAULT_ENUMERATION_CAP,
    CoherentSpace,
    SetFamily,
    SpaceError,
    _check_cap,
    anticlique_number_table,
    clique_number_table,
    cliques,
    dual,
    max_anticlique,
    omega,
)

THRESHOLD_NOTE = (
    "checked at a finite intersection/anticlique threshold; "
    "exact for finite webs, no unbounded claim intended"
)


def _family_masks(f: SetFamily) -> list[int]:
    pos = {v: i for i, v in enumerate(f.web)}
    out = []
    for x in f.members:
        m = 0
        for v in x:
            m |= 1 << pos[v]
        out.append(m)
    return sorted(out)


def _masks_to_family(web: tuple[int, ...], masks) -> SetFamily:
    members = frozenset(
        frozenset(web[i] for i in range(len(web)) if (m >> i) & 1)
        for m in masks
    )
    return SetFamily(web, members)


def _dual_m_masks(web_size: int, member_masks: list[int], m: int) -> list[int]:
    out = []
    for s in range(1 << web_size):
        if all((s & y).bit_count() <= m for y in member_masks):
            out.append(s)
    return out


def dual_m(f: SetFamily, m: int,
           cap: int = DEFAULT_ENUMERATION_CAP) -> SetFamily:
    """{x subset of web : for all y in f, #(x n y) <= m}, over the full
    powerset of the web."""
    if m < 1:
        raise SpaceError("intersection bound m must be >= 1")
    n = len(f.web)
    _check_cap(n, cap)
    masks = _dual_m_masks(n, _family_masks(f), m)
    return _masks_to_family(f.web, masks)


def closure_m(f: SetFamily, m: int,
              cap: int = DEFAULT_ENUMERATION_CAP) -> SetFamily:
    """dual_m applied twice; a closure operator on families."""
    return dual_m(dual_m(f, m, cap), m, cap)


def fin_k(c: CoherentSpace, k: int,
          cap: int = DEFAULT_ENUMERATION_CAP) -> SetFamily:
    """Subsets of the web containing no anticlique of size > k."""
    if k < 0:
        raise SpaceError("anticlique bound k must be >= 0")
    _check_cap(c.n, cap)
    at = anticlique_number_table(c, cap)
    masks = [s for s in range(1 << c.n) if at[s] <= k]
    return _masks_to_family(c.web, masks)


def check_incoherence_closure_laws(
    c: CoherentSpace,
    k: int,
    rng=None,
    pair_budget: int = 200,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> LawReport:
    """Four bounded laws of the finitely-incoherent family fin_k:

    1. every subset of size <= k belongs to fin_k;
    2. fin_k is downward closed;
    3. x, y in fin_k implies x u y in fin_{2k} (union at doubled threshold);
    4. every clique belongs to fin_k when k >= 1.

    Items 1, 2 and 4 are exhaustive over the powerset; item 3 checks all
    member pairs when there are at most ``pair_budget`` of them, otherwise a
    seeded sample of ``pair_budget`` pairs (recorded in the report params).
    """
    _check_cap(c.n, cap)
    at = anticlique_number_table(c, cap)
    ct = clique_number_table(c, cap)
    fin_masks = [s for s in range(1 << c.n) if at[s] <= k]
    fin_set = set(fin_masks)
    items: dict[str, bool] = {}
    witness = None

    # item 1: small subsets included
    ok = True
    for size in range(0, k + 1):
        if size > c.n:
            break
        for combo in combinations(range(c.n), size):
            s = 0
            for i in combo:
                s |= 1 << i
            if s not in fin_set:
                ok = False
                witness = witness or {
                    "item": "small_sets_included",
                    "subset": sorted(c.labels_of(s)),
                }
                break
        if not ok:
            break
    items["small_sets_included"] = ok

    # item 2: downward closed (single-element removals suffice)
    ok = True
    for s in fin_masks:
        m = s
        while m:
            bit = m & -m
            m &= ~bit
            if (s & ~bit) not in fin_set:
                ok = False
                witness = witness or {
                    "item": "downward_closed",
                    "subset": sorted(c.labels_of(s)),
                    "removed": sorted(c.labels_of(bit)),
                }
                break
        if not ok:
            break
    items["downward_closed"] = ok

    # item 3: unions land in fin_{2k}
    ok = True
    sampled = False
    npairs = len(fin_masks) * len(fin_masks)
    if npairs <= pair_budget or rng is None:
        pairs = ((x, y) for x in fin_masks for y in fin_masks)
    else:
        sampled = True
        pairs = ((rng.choice(fin_masks), rng.choice(fin_masks))
                 for _ in range(pair_budget))
    for x, y in pairs:
        if at[x | y] > 2 * k:
            ok = False
            witness = witness or {
                "item": "union_doubled_threshold",
                "x": sorted(c.labels_of(x)),
                "y": sorted(c.labels_of(y)),
                "alpha_union": at[x | y],
            }
            break
    items["union_doubled_threshold"] = ok

    # item 4: cliques included (needs k >= 1)
    ok = True
    for s in range(1 << c.n):
        if ct[s] == s.bit_count() and s not in fin_set:
            ok = False
            witness = witness or {
                "item": "cliques_included",
                "clique": sorted(c.labels_of(s)),
                "alpha": at[s],
            }
            break
    items["cliques_included"] = ok

    return LawReport(
        law="bounded-incoherence-closure-laws",
        params={
            "k": k,
            "web_size": c.n,
            "items": items,
            "union_pairs_sampled": sampled,
            "note": THRESHOLD_NOTE,
        },
        passed=all(items.values()),
        witness=witness,
    )


def check_clique_dual_law(c: CoherentSpace, m: int,
                          cap: int = DEFAULT_ENUMERATION_CAP) -> LawReport:
    """Exact finite law: dual_m(cliques(C)) = {x : omega(C,x) <= m}
    = fin_m(dual(C)).

    The three sides are computed by independent routes (intersection
    counting, the clique-number table, and the anticlique table of the dual)
    and compared as sets.
    """
    _check_cap(c.n, cap)
    fam = cliques(c, cap)
    lhs = set(_dual_m_masks(c.n, _family_masks(fam), m))
    ct = clique_number_table(c, cap)
    mid = {s for s in range(1 << c.n) if ct[s] <= m}
    rhs = set(_family_masks(fin_k(dual(c), m, cap)))
    passed = lhs == mid == rhs
    witness = None
    if not passed:
        diff = (lhs ^ mid) | (mid ^ rhs)
        s = min(diff)
        witness = {
            "subset": sorted(c.labels_of(s)),
            "in_dual_of_cliques": s in lhs,
            "omega_at_most_m": s in mid,
            "in_fin_of_dual": s in rhs,
        }
    return LawReport(
        law="clique-dual-exactness",
        params={"m": m, "web_size": c.n, "note": THRESHOLD_NOTE},
        passed=passed,
        witness=witness,
    )


def min_anticlique_cover_bounds(
    c: CoherentSpace, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[int, int]:
    """(lower, upper) bounds on the least number of anticliques covering the
    web: lower = omega (a clique meets each anticlique at most once), upper
    by greedy removal of maximum anticliques."""
    _check_cap(c.n, cap)
    lower = omega(c)
    remaining = set(c.web)
    upper = 0
    while remaining:
        block = max_anticlique(c, remaining)
        if not block:
            break
        remaining -= block
        upper += 1
    return lower, upper
