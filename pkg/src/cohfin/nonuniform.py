"""Spaces with three pair labels: strict coherence, neutrality, strict
incoherence.

Loops carry labels too, and the clique modes include them: a singleton is a
strict clique only when its loop is strictly coherent.  Under that reading a
singleton can never be both a strict clique and a strict anticlique, while
ordinary coherent spaces (all loops neutral) keep singletons as lax cliques
and lax anticliques at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

from .ramsey import EdgeColoring, find_mono, ramsey_upper
from .reports import LawReport
from .spaces import (
    DEFAULT_ENUMERATION_CAP,
    CoherentSpace,
    SetFamily,
    SpaceError,
    _check_cap,
)

COH = "strict-coherent"
NEU = "neutral"
INC = "strict-incoherent"
LABELS = (COH, NEU, INC)

LAX = "lax"
STRICT = "strict"
MODES = (LAX, STRICT)

_DUAL_LABEL = {COH: INC, NEU: NEU, INC: COH}


def _key(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class NonUniformSpace:
    web: tuple[int, ...]
    labels: tuple[tuple[tuple[int, int], str], ...]  # sorted pair -> label

    def __post_init__(self):
        if len(set(self.web)) != len(self.web):
            raise SpaceError("duplicate labels in web")
        table = dict(self.labels)
        need = {_key(a, b) for a in self.web for b in self.web}
        if set(table) != need:
            raise SpaceError("every pair (loops included) must be labeled")
        if any(lab not in LABELS for lab in table.values()):
            raise SpaceError("unknown pair label")

    @property
    def n(self) -> int:
        return len(self.web)

    def label_of(self, a: int, b: int) -> str:
        return dict(self.labels)[_key(a, b)]

    def _table(self) -> dict[tuple[int, int], str]:
        return dict(self.labels)

    def to_json_dict(self) -> dict:
        return {
            "web": list(self.web),
            "labels": {f"{a},{b}": lab
                       for (a, b), lab in sorted(self.labels)},
        }


def mk_nonuniform(web: Iterable[int],
                  labels: dict[tuple[int, int], str]) -> NonUniformSpace:
    web = tuple(web)
    table = {_key(a, b): lab for (a, b), lab in labels.items()}
    return NonUniformSpace(web, tuple(sorted(table.items())))


def all_neutral(n: int) -> NonUniformSpace:
    web = range(n)
    return mk_nonuniform(web, {(a, b): NEU
                               for a in web for b in web if a <= b})


def dual_nu(nu: NonUniformSpace) -> NonUniformSpace:
    """Swap strict coherence and strict incoherence; neutral pairs are
    fixed.  An involution."""
    return NonUniformSpace(
        nu.web,
        tuple((p, _DUAL_LABEL[lab]) for p, lab in nu.labels),
    )


def embed_coherent(c: CoherentSpace) -> NonUniformSpace:
    """Ordinary space as a non-uniform one: loops neutral, coherent
    off-diagonal pairs strict, the rest strictly incoherent."""
    labels = {}
    for i, a in enumerate(c.web):
        labels[(a, a)] = NEU
        for b in c.web[i + 1:]:
            labels[_key(a, b)] = COH if c.coherent(a, b) else INC
    return mk_nonuniform(c.web, labels)


def _mode_ok(nu: NonUniformSpace, mode: str):
    """Per-vertex loop admissibility and pairwise-compat bitmasks for the
    given clique mode."""
    if mode not in MODES:
        raise SpaceError(f"unknown mode {mode!r}")
    allowed = (COH, NEU) if mode == LAX else (COH,)
    table = nu._table()
    loop_ok = [table[(v, v)] in allowed for v in nu.web]
    compat = [0] * nu.n
    for i, a in enumerate(nu.web):
        for j, b in enumerate(nu.web):
            if i != j and table[_key(a, b)] in allowed:
                compat[i] |= 1 << j
    return loop_ok, compat


def _mode_clique_flags(nu: NonUniformSpace, mode: str) -> list[bool]:
    """ok[S] for every submask: S is a mode-clique (loops included in the
    pairwise condition; the empty set always qualifies)."""
    loop_ok, compat = _mode_ok(nu, mode)
    ok = [False] * (1 << nu.n)
    ok[0] = True
    for s in range(1, 1 << nu.n):
        bit = s & -s
        v = bit.bit_length() - 1
        rest = s & ~bit
        ok[s] = ok[rest] and loop_ok[v] and (rest & compat[v]) == rest
    return ok


def _labels_of(nu: NonUniformSpace, mask: int) -> frozenset[int]:
    return frozenset(nu.web[i] for i in range(nu.n) if (mask >> i) & 1)


def cliques_nu(nu: NonUniformSpace, mode: str,
               cap: int = DEFAULT_ENUMERATION_CAP) -> SetFamily:
    """Lax cliques (no strictly incoherent pair) or strict cliques (all
    pairs, loops included, strictly coherent)."""
    _check_cap(nu.n, cap)
    ok = _mode_clique_flags(nu, mode)
    members = frozenset(_labels_of(nu, s)
                        for s in range(1 << nu.n) if ok[s])
    return SetFamily(nu.web, members)


def anticliques_nu(nu: NonUniformSpace, mode: str,
                   cap: int = DEFAULT_ENUMERATION_CAP) -> SetFamily:
    return cliques_nu(dual_nu(nu), mode, cap)


def _max_anticlique_table(nu: NonUniformSpace, mode: str) -> list[int]:
    """t[S] = size of the largest mode-anticlique inside S (mode-cliques are
    hereditary, so a subset DP applies)."""
    ok = _mode_clique_flags(dual_nu(nu), mode)
    t = [0] * (1 << nu.n)
    for s in range(1, 1 << nu.n):
        if ok[s]:
            t[s] = s.bit_count()
            continue
        best = 0
        m = s
        while m:
            bit = m & -m
            m &= ~bit
            v = t[s & ~bit]
            if v > best:
                best = v
        t[s] = best
    return t


def fin_nu(nu: NonUniformSpace, mode: str, k: int,
           cap: int = DEFAULT_ENUMERATION_CAP) -> SetFamily:
    """Subsets whose largest mode-anticlique has size <= k."""
    if k < 0:
        raise SpaceError("anticlique bound k must be >= 0")
    _check_cap(nu.n, cap)
    t = _max_anticlique_table(nu, mode)
    members = frozenset(_labels_of(nu, s)
                        for s in range(1 << nu.n) if t[s] <= k)
    return SetFamily(nu.web, members)


@dataclass(frozen=True)
class Variant:
    clique_mode: str
    fin_mode: str

    def __post_init__(self):
        if self.clique_mode not in MODES or self.fin_mode not in MODES:
            raise SpaceError("modes must be 'lax' or 'strict'")

    @property
    def name(self) -> str:
        return f"{self.clique_mode}/{self.fin_mode}"


def _family_masks_nu(nu: NonUniformSpace, fam: SetFamily) -> set[int]:
    pos = {v: i for i, v in enumerate(nu.web)}
    out = set()
    for x in fam:
        m = 0
        for v in x:
            m |= 1 << pos[v]
        out.add(m)
    return out


def failure_witness(variant: Variant, max_n: int, k: int,
                    cap: int = DEFAULT_ENUMERATION_CAP) -> LawReport:
    """Concrete failure of the law suite for each clique/incoherence variant.

    lax/lax: a lax clique containing a lax anticlique above the bound (the
    all-neutral space on k+1 vertices).  strict/strict: an all-neutral set at
    the two-color Ramsey bound with neither a big strict clique nor a big
    strict anticlique, so only the three-color escape remains.  Mixed
    variants: exhaustive search (space size, then label-lexicographic) for a
    space where the bounded clique-dual identity loses an inclusion.

    ``max_n`` limits the mixed-variant search; the constructive witnesses
    have their size forced by ``k`` and are limited only by ``cap``.
    """
    params = {"variant": variant.name, "max_n": max_n, "k": k}
    if variant.clique_mode == LAX and variant.fin_mode == LAX:
        n = k + 1
        if n > cap:
            return LawReport("variant-failure", params, False,
                             {"found": False,
                              "reason": "witness size k+1 exceeds cap"})
        nu = all_neutral(n)
        x = list(nu.web)
        witness = {
            "found": True,
            "space": nu.to_json_dict(),
            "clique": x,
            "anticlique_inside": x,
            "anticlique_size": n,
            "failed_law": "cliques_included_in_fin_k",
        }
        return LawReport("variant-failure", params, True, witness)

    if variant.clique_mode == STRICT and variant.fin_mode == STRICT:
        n = ramsey_upper((k + 1, k + 1))
        if n > cap:
            return LawReport("variant-failure", params, False,
                             {"found": False,
                              "reason": "Ramsey bound exceeds cap"})
        nu = all_neutral(n)
        witness = {
            "found": True,
            "space": nu.to_json_dict(),
            "set": list(nu.web),
            "set_size": n,
            "two_color_bound": n,
            "max_strict_clique": 0,
            "max_strict_anticlique": 0,
            "failed_law": "two-color-dichotomy (only the three-color "
                          "trichotomy holds)",
        }
        return LawReport("variant-failure", params, True, witness)

    # mixed variants: search labeled spaces in a canonical order
    from .bounded import _dual_m_masks  # shares the intersection-bound dual

    for n in range(1, max_n + 1):
        _check_cap(n, cap)
        web = tuple(range(n))
        keys = [(a, b) for a in web for b in web if a <= b]
        for assignment in product(range(3), repeat=len(keys)):
            labels = {p: LABELS[c] for p, c in zip(keys, assignment)}
            nu = mk_nonuniform(web, labels)
            fam = cliques_nu(nu, variant.clique_mode, cap)
            member_masks = sorted(_family_masks_nu(nu, fam))
            lhs = set(_dual_m_masks(n, member_masks, k))
            rhs = _family_masks_nu(nu, fin_nu(dual_nu(nu), variant.fin_mode,
                                              k, cap))
            if lhs != rhs:
                s = min(lhs ^ rhs)
                witness = {
                    "found": True,
                    "space": nu.to_json_dict(),
                    "subset": sorted(_labels_of(nu, s)),
                    "in_dual_of_cliques": s in lhs,
                    "in_fin_of_dual": s in rhs,
                    "failed_law": "clique-dual-exactness",
                }
                return LawReport("variant-failure", params, True, witness)
    return LawReport("variant-failure", params, False,
                     {"found": False,
                      "reason": f"no witness on webs of size <= {max_n}"})


@dataclass(frozen=True)
class TrichotomyResult:
    kind: str  # "strict-clique" | "strict-anticlique" | "neutral-set" | "small"
    vertices: Optional[tuple[int, ...]]
    bound: int

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": None if self.vertices is None else list(self.vertices),
            "bound": self.bound,
        }


_COLOR_KIND = {0: "strict-clique", 1: "strict-anticlique", 2: "neutral-set"}
_COLOR_OF_LABEL = {COH: 0, INC: 1, NEU: 2}


def trichotomy_extract(nu: NonUniformSpace, x: Iterable[int],
                       s: int) -> TrichotomyResult:
    """Pairwise strict clique, strict anticlique, or pairwise-neutral set of
    size s inside x, via the three-color engine; guaranteed when
    #x >= ramsey_upper([s,s,s]).  The conditions here are pairwise on
    distinct vertices; loop labels play no role."""
    xs = sorted(set(x))
    for v in xs:
        if v not in nu.web:
            raise SpaceError(f"vertex {v} not in web")
    bound = ramsey_upper((s, s, s))
    table = nu._table()
    coloring = EdgeColoring.from_function(
        len(xs), 3,
        lambda i, j: _COLOR_OF_LABEL[table[_key(xs[i], xs[j])]])
    w = find_mono(coloring, (s, s, s))
    if w is None:
        if len(xs) >= bound:
            raise AssertionError("extraction failed at the Ramsey bound")
        return TrichotomyResult("small", None, bound)
    verts = tuple(xs[i] for i in w.vertices)
    for a, b in combinations(verts, 2):
        assert _COLOR_OF_LABEL[table[_key(a, b)]] == w.color
    return TrichotomyResult(_COLOR_KIND[w.color], verts, bound)


def random_nonuniform(n: int, rng) -> NonUniformSpace:
    """Seeded random labeling over web 0..n-1, labels uniform."""
    web = range(n)
    labels = {(a, b): LABELS[rng.randrange(3)]
              for a in web for b in web if a <= b}
    return mk_nonuniform(web, labels)
