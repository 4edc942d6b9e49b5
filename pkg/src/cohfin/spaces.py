"""Finite coherent spaces: reflexive symmetric graphs with a small algebra.

A space is a finite web of integer labels plus a coherence relation that is
symmetric and has a true diagonal.  Internally the relation is stored as one
adjacency bitmask per web position (diagonal bit included), which keeps the
clique machinery fast enough for exhaustive sweeps.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

DEFAULT_ENUMERATION_CAP = 20


class SpaceError(ValueError):
    """Malformed space or vertex set."""


class EnumerationCapError(SpaceError):
    """Web too large for a full powerset / family enumeration."""


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise EnumerationCapError(
            f"web has {n} vertices, enumeration cap is {cap}"
        )


@dataclass(frozen=True)
class CoherentSpace:
    """Web (tuple of distinct nonnegative integer labels) + coherence masks.

    ``adj[i]`` is the bitmask, over web positions, of vertices coherent with
    ``web[i]``; bit ``i`` is always set (reflexivity).
    """

    web: tuple[int, ...]
    adj: tuple[int, ...]

    def __post_init__(self):
        n = len(self.web)
        if len(set(self.web)) != n:
            raise SpaceError("duplicate labels in web")
        if any(v < 0 for v in self.web):
            raise SpaceError("vertex labels must be nonnegative integers")
        if len(self.adj) != n:
            raise SpaceError("adjacency size does not match web")
        for i in range(n):
            if not (self.adj[i] >> i) & 1:
                raise SpaceError(f"missing reflexive loop at {self.web[i]}")
            for j in range(i + 1, n):
                if ((self.adj[i] >> j) & 1) != ((self.adj[j] >> i) & 1):
                    raise SpaceError(
                        f"coherence not symmetric at ({self.web[i]}, {self.web[j]})"
                    )

    @property
    def n(self) -> int:
        return len(self.web)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def index(self, label: int) -> int:
        try:
            return self.web.index(label)
        except ValueError:
            raise SpaceError(f"vertex {label} not in web") from None

    def coherent(self, a: int, b: int) -> bool:
        return bool((self.adj[self.index(a)] >> self.index(b)) & 1)

    def mask_of(self, elements: Iterable[int]) -> int:
        m = 0
        for v in elements:
            m |= 1 << self.index(v)
        return m

    def labels_of(self, mask: int) -> frozenset[int]:
        return frozenset(self.web[i] for i in range(self.n) if (mask >> i) & 1)

    def coherent_pairs(self) -> list[tuple[int, int]]:
        """Off-diagonal coherent pairs, each once, sorted."""
        out = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (self.adj[i] >> j) & 1:
                    out.append((min(self.web[i], self.web[j]),
                                max(self.web[i], self.web[j])))
        return sorted(out)

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "web": list(self.web),
            "coherent_pairs": [list(p) for p in self.coherent_pairs()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, d: dict) -> "CoherentSpace":
        return mk_space(d["web"], [tuple(p) for p in d["coherent_pairs"]])

    def to_dot(self, name: str = "G") -> str:
        """Undirected DOT graph; one edge per coherent off-diagonal pair,
        reflexive loops omitted."""
        lines = [f"graph {name} {{"]
        for v in self.web:
            lines.append(f"  {v};")
        for a, b in self.coherent_pairs():
            lines.append(f"  {a} -- {b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SetFamily:
    """A deduplicated collection of subsets of a fixed web."""

    web: tuple[int, ...]
    members: frozenset[frozenset[int]]

    def __post_init__(self):
        webset = set(self.web)
        for x in self.members:
            if not x <= webset:
                raise SpaceError(f"family member {sorted(x)} not within web")

    def __contains__(self, x: Iterable[int]) -> bool:
        return frozenset(x) in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.members)

    def sorted_members(self) -> list[list[int]]:
        return sorted(sorted(x) for x in self.members)

    def to_json_dict(self) -> dict:
        return {"web": list(self.web), "members": self.sorted_members()}


# -- constructors ----------------------------------------------------------

def mk_space(web: Iterable[int],
             coherent_pairs: Iterable[Iterable[int]]) -> CoherentSpace:
    """Build a space from a web and a list of unordered coherent pairs.

    The relation stored is the symmetric reflexive closure of the pairs.
    """
    web_t = tuple(web)
    pos = {v: i for i, v in enumerate(web_t)}
    if len(pos) != len(web_t):
        raise SpaceError("duplicate labels in web")
    adj = [1 << i for i in range(len(web_t))]
    for pair in coherent_pairs:
        pair = tuple(pair)
        for v in pair:
            if v not in pos:
                raise SpaceError(f"vertex {v} not in web")
        if len(pair) != 2:
            raise SpaceError(f"coherent pair must have two labels, got {pair}")
        a, b = pair
        adj[pos[a]] |= 1 << pos[b]
        adj[pos[b]] |= 1 << pos[a]
    return CoherentSpace(web_t, tuple(adj))


def complete(n: int) -> CoherentSpace:
    """K_n: all pairs coherent."""
    if n < 1:
        raise SpaceError("complete requires n >= 1")
    full = (1 << n) - 1
    return CoherentSpace(tuple(range(n)), tuple(full for _ in range(n)))


def discrete(n: int) -> CoherentSpace:
    """n vertices, loops only."""
    if n < 0:
        raise SpaceError("discrete requires n >= 0")
    return CoherentSpace(tuple(range(n)), tuple(1 << i for i in range(n)))


def path(n: int) -> CoherentSpace:
    """Path 0 - 1 - ... - (n-1) with reflexive loops."""
    if n < 0:
        raise SpaceError("path requires n >= 0")
    return mk_space(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> CoherentSpace:
    """Cycle on n >= 3 vertices with reflexive loops."""
    if n < 3:
        raise SpaceError("cycle requires n >= 3")
    return mk_space(range(n), [(i, (i + 1) % n) for i in range(n)])


def disjoint_kn(n: int) -> CoherentSpace:
    """Disjoint union of K_1, K_2, ..., K_n on n(n+1)/2 vertices.

    Block b (1-based, size b) occupies labels [b(b-1)/2, b(b+1)/2).
    """
    if n < 1:
        raise SpaceError("disjoint_kn requires n >= 1")
    pairs = []
    for b in range(1, n + 1):
        start = b * (b - 1) // 2
        block = range(start, start + b)
        pairs.extend(combinations(block, 2))
    return mk_space(range(n * (n + 1) // 2), pairs)


# -- connectives -----------------------------------------------------------

def dual(c: CoherentSpace) -> CoherentSpace:
    """Reflexive closure of the complement; an involution."""
    full = c.full_mask
    adj = tuple((~c.adj[i] & full) | (1 << i) for i in range(c.n))
    return CoherentSpace(c.web, adj)


def tensor_label(c1: CoherentSpace, c2: CoherentSpace, a: int, b: int) -> int:
    """Row-major pair encoding used for tensor and hom webs."""
    return c1.index(a) * c2.n + c2.index(b)


def tensor_unlabel(c1: CoherentSpace, c2: CoherentSpace,
                   label: int) -> tuple[int, int]:
    i, j = divmod(label, c2.n)
    return c1.web[i], c2.web[j]


def tensor(c1: CoherentSpace, c2: CoherentSpace) -> CoherentSpace:
    """Product web; (a,b) coherent with (a',b') iff coherent componentwise.

    Pair (web position i of c1, position j of c2) gets label i*|c2| + j.
    """
    n1, n2 = c1.n, c2.n
    n = n1 * n2
    adj = []
    for i in range(n1):
        for j in range(n2):
            m = 0
            for i2 in range(n1):
                if not (c1.adj[i] >> i2) & 1:
                    continue
                row = c2.adj[j] << (i2 * n2)
                m |= row
            adj.append(m)
    return CoherentSpace(tuple(range(n)), tuple(adj))


def plus(c1: CoherentSpace, c2: CoherentSpace) -> CoherentSpace:
    """Tagged disjoint union: c1 keeps positions 0..n1-1, c2 is shifted by n1;
    cross pairs are incoherent."""
    n1 = c1.n
    adj = list(c1.adj) + [a << n1 for a in c2.adj]
    return CoherentSpace(tuple(range(n1 + c2.n)), tuple(adj))


def plus_left_labels(c1: CoherentSpace) -> tuple[int, ...]:
    return tuple(range(c1.n))


def plus_right_labels(c1: CoherentSpace, c2: CoherentSpace) -> tuple[int, ...]:
    return tuple(range(c1.n, c1.n + c2.n))


# -- cliques and clique numbers ---------------------------------------------

def _open_adj(c: CoherentSpace) -> list[int]:
    return [c.adj[i] & ~(1 << i) for i in range(c.n)]


def _iter_clique_masks(open_adj: list[int], universe: int) -> Iterator[int]:
    """All clique masks within ``universe``, each exactly once (the empty
    clique included)."""
    yield 0
    stack = [(0, universe)]
    while stack:
        cur, cand = stack.pop()
        while cand:
            bit = cand & -cand
            v = bit.bit_length() - 1
            cand &= ~bit
            nxt = cur | bit
            yield nxt
            stack.append((nxt, cand & open_adj[v]))


def cliques(c: CoherentSpace, cap: int = DEFAULT_ENUMERATION_CAP) -> SetFamily:
    """The family of all cliques of ``c`` (empty set and singletons included)."""
    _check_cap(c.n, cap)
    oa = _open_adj(c)
    members = frozenset(c.labels_of(m)
                        for m in _iter_clique_masks(oa, c.full_mask))
    return SetFamily(c.web, members)


def is_clique(c: CoherentSpace, x: Iterable[int]) -> bool:
    mask = c.mask_of(x)
    oa = _open_adj(c)
    m = mask
    while m:
        bit = m & -m
        v = bit.bit_length() - 1
        m &= ~bit
        if m & ~oa[v]:
            return False
    return True


def _max_clique_mask(open_adj: list[int], universe: int) -> tuple[int, int]:
    """Exact branch-and-bound maximum clique within ``universe``.

    Returns (size, witness mask).  Deterministic: vertices are branched in
    increasing position order, so the witness is reproducible.
    """
    best_size = 0
    best_mask = 0

    def expand(cur_mask: int, cur_size: int, cand: int) -> None:
        nonlocal best_size, best_mask
        while cand:
            if cur_size + cand.bit_count() <= best_size:
                return
            bit = cand & -cand
            v = bit.bit_length() - 1
            cand &= ~bit
            nmask = cur_mask | bit
            nsize = cur_size + 1
            if nsize > best_size:
                best_size, best_mask = nsize, nmask
            ncand = cand & open_adj[v]
            if ncand:
                expand(nmask, nsize, ncand)

    expand(0, 0, universe)
    return best_size, best_mask


def max_clique(c: CoherentSpace,
               x: Optional[Iterable[int]] = None) -> frozenset[int]:
    """A maximum clique within ``x`` (full web when omitted)."""
    universe = c.full_mask if x is None else c.mask_of(x)
    _, mask = _max_clique_mask(_open_adj(c), universe)
    return c.labels_of(mask)


def max_anticlique(c: CoherentSpace,
                   x: Optional[Iterable[int]] = None) -> frozenset[int]:
    """A maximum anticlique within ``x``; anticliques of c are cliques of
    dual(c)."""
    return max_clique(dual(c), x)


def omega(c: CoherentSpace, x: Optional[Iterable[int]] = None) -> int:
    """Maximum clique size within ``x`` (full web when omitted)."""
    universe = c.full_mask if x is None else c.mask_of(x)
    size, _ = _max_clique_mask(_open_adj(c), universe)
    return size


def alpha(c: CoherentSpace, x: Optional[Iterable[int]] = None) -> int:
    """Maximum anticlique size within ``x``."""
    return omega(dual(c), x)


def clique_number_table(c: CoherentSpace,
                        cap: int = DEFAULT_ENUMERATION_CAP) -> list[int]:
    """omega(c, S) for every submask S of the web, by subset DP.

    Used by the powerset sweeps; agrees with the branch-and-bound ``omega``
    (cross-checked in tests).
    """
    _check_cap(c.n, cap)
    oa = _open_adj(c)
    t = [0] * (1 << c.n)
    for s in range(1, 1 << c.n):
        bit = s & -s
        v = bit.bit_length() - 1
        rest = s & ~bit
        with_v = 1 + t[rest & oa[v]]
        t[s] = with_v if with_v > t[rest] else t[rest]
    return t


def anticlique_number_table(c: CoherentSpace,
                            cap: int = DEFAULT_ENUMERATION_CAP) -> list[int]:
    return clique_number_table(dual(c), cap)


# -- sweeps ------------------------------------------------------------------

def all_spaces(n: int) -> Iterator[CoherentSpace]:
    """Every coherent space on web 0..n-1 (2^C(n,2) of them), in a fixed
    deterministic order."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        chosen = [p for k, p in enumerate(pairs) if (bits >> k) & 1]
        yield mk_space(range(n), chosen)


def random_space(n: int, rng, edge_prob: float = 0.5) -> CoherentSpace:
    """Seeded random space on web 0..n-1, each off-diagonal pair coherent
    with probability ``edge_prob``."""
    chosen = [p for p in combinations(range(n), 2)
              if rng.random() < edge_prob]
    return mk_space(range(n), chosen)
