"""Finite Ramsey machinery for 2 and 3 colors.

``ramsey_upper`` is the classical recurrence bound (sum of single-size
decrements, base case 1 when any target size is 1); ``find_mono`` extracts a
monochromatic witness constructively by the pigeonhole argument behind that
recurrence, so it is guaranteed to succeed whenever the vertex count reaches
the bound.  ``ramsey_exact`` confirms small two-color values by exhausting
every coloring and also emits a lower-bound coloring.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .spaces import (
    CoherentSpace,
    SpaceError,
    alpha,
    max_anticlique,
    max_clique,
    omega,
    tensor,
)


class RamseyError(ValueError):
    pass


class InfeasibleError(RamseyError):
    """Exhaustive confirmation refused: search space too large."""


@dataclass(frozen=True)
class EdgeColoring:
    """A c-coloring of the unordered pairs of {0..n-1}."""

    n: int
    c: int
    colors: tuple[int, ...]  # indexed by pair rank, see pair_index

    def __post_init__(self):
        if self.c not in (2, 3):
            raise RamseyError("color count must be 2 or 3")
        if len(self.colors) != self.n * (self.n - 1) // 2:
            raise RamseyError("wrong number of colored pairs")
        if any(not 0 <= col < self.c for col in self.colors):
            raise RamseyError("color out of range")

    @staticmethod
    def pair_index(u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return v * (v - 1) // 2 + u

    def color(self, u: int, v: int) -> int:
        if u == v:
            raise RamseyError("loops are not colored")
        return self.colors[self.pair_index(u, v)]

    @classmethod
    def from_function(cls, n: int, c: int, f) -> "EdgeColoring":
        cols = [0] * (n * (n - 1) // 2)
        for v in range(n):
            for u in range(v):
                cols[cls.pair_index(u, v)] = f(u, v)
        return cls(n, c, tuple(cols))

    @classmethod
    def from_pair_bits(cls, n: int, bits: int) -> "EdgeColoring":
        """Two-color shorthand: bit k of ``bits`` is the color of pair k."""
        npairs = n * (n - 1) // 2
        return cls(n, 2, tuple((bits >> k) & 1 for k in range(npairs)))

    @classmethod
    def from_space(cls, c: CoherentSpace) -> "EdgeColoring":
        """Color 0 = coherent off-diagonal pair, color 1 = incoherent.
        Requires web 0..n-1."""
        if c.web != tuple(range(c.n)):
            raise RamseyError("coloring from a space requires web 0..n-1")
        return cls.from_function(c.n, 2,
                                 lambda u, v: 0 if c.coherent(u, v) else 1)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "c": self.c,
            "pairs": {f"{u},{v}": self.color(u, v)
                      for v in range(self.n) for u in range(v)},
        }


@dataclass(frozen=True)
class RamseyWitness:
    color: int
    vertices: tuple[int, ...]

    def verify(self, coloring: EdgeColoring) -> bool:
        return all(coloring.color(u, v) == self.color
                   for u, v in combinations(self.vertices, 2))

    def to_json_dict(self) -> dict:
        return {"color": self.color, "vertices": list(self.vertices)}


@lru_cache(maxsize=None)
def _upper(sizes: tuple[int, ...]) -> int:
    if any(s < 1 for s in sizes):
        raise RamseyError("target sizes must be >= 1")
    if any(s == 1 for s in sizes):
        return 1
    total = 0
    for i in range(len(sizes)):
        dec = sizes[:i] + (sizes[i] - 1,) + sizes[i + 1:]
        total += _upper(dec)
    return total


def ramsey_upper(sizes: Sequence[int], c: Optional[int] = None) -> int:
    """Recurrence upper bound for the Ramsey number of ``sizes``.

    For two colors this is the binomial bound (so ramsey_upper([2,b]) = b and
    ramsey_upper([3,3]) = 6); three colors use the same sum-of-decrements
    recurrence.  Always >= the true Ramsey number.
    """
    sizes = tuple(sizes)
    if c is None:
        c = len(sizes)
    if c != len(sizes) or c not in (2, 3):
        raise RamseyError("need 2 or 3 target sizes")
    return _upper(sizes)


def _search(vertices: list[int], targets: tuple[int, ...],
            coloring: EdgeColoring) -> Optional[RamseyWitness]:
    for i, t in enumerate(targets):
        if t == 0:
            return RamseyWitness(i, ())
    for i, t in enumerate(targets):
        if t == 1 and vertices:
            return RamseyWitness(i, (vertices[0],))
    if not vertices:
        return None
    pivot = vertices[0]
    buckets: list[list[int]] = [[] for _ in range(len(targets))]
    for u in vertices[1:]:
        buckets[coloring.color(pivot, u)].append(u)
    for ci in range(len(targets)):
        dec = targets[:ci] + (targets[ci] - 1,) + targets[ci + 1:]
        w = _search(buckets[ci], dec, coloring)
        if w is None:
            continue
        if w.color == ci:
            return RamseyWitness(ci, (pivot,) + w.vertices)
        return w
    return None


def find_mono(coloring: EdgeColoring,
              sizes: Sequence[int]) -> Optional[RamseyWitness]:
    """Monochromatic witness of size sizes[color] in some color, or None.

    The pivot is always the smallest remaining vertex, so the witness is
    deterministic.  A witness is guaranteed whenever
    coloring.n >= ramsey_upper(sizes); below that bound None is a legal
    answer even if a witness exists.
    """
    sizes = tuple(sizes)
    if len(sizes) != coloring.c:
        raise RamseyError("one target size per color required")
    if any(s < 1 for s in sizes):
        raise RamseyError("target sizes must be >= 1")
    w = _search(list(range(coloring.n)), sizes, coloring)
    if w is not None:
        assert w.verify(coloring) and len(w.vertices) == sizes[w.color]
    return w


@dataclass(frozen=True)
class RamseyExactResult:
    sizes: tuple[int, int]
    value: int
    lower_bound_coloring: Optional[EdgeColoring]  # arrow-free on value-1 vertices

    def to_json_dict(self) -> dict:
        return {
            "sizes": list(self.sizes),
            "value": self.value,
            "lower_bound_coloring": (
                None if self.lower_bound_coloring is None
                else self.lower_bound_coloring.to_json_dict()),
        }


def _has_mono(n: int, bits: int, a_masks: list[int], b_masks: list[int]) -> bool:
    for m in a_masks:
        if bits & m == 0:
            return True
    for m in b_masks:
        if bits & m == m:
            return True
    return False


def ramsey_exact(sizes: Sequence[int], budget: int = 6) -> RamseyExactResult:
    """Least n such that every 2-coloring of K_n has a monochromatic clique of
    size sizes[0] in color 0 or sizes[1] in color 1; verified by exhausting
    all colorings.  Refuses when ramsey_upper(sizes) > budget."""
    sizes = tuple(sizes)
    if len(sizes) != 2 or any(s < 1 for s in sizes):
        raise RamseyError("ramsey_exact takes two sizes >= 1")
    a, b = sizes
    upper = ramsey_upper(sizes)
    if upper > budget:
        raise InfeasibleError(
            f"ramsey_upper({list(sizes)}) = {upper} exceeds exhaustion "
            f"budget {budget}")
    last_free: Optional[EdgeColoring] = None
    for n in range(1, upper + 1):
        npairs = n * (n - 1) // 2
        a_masks = []
        for combo in combinations(range(n), a):
            m = 0
            for u, v in combinations(combo, 2):
                m |= 1 << EdgeColoring.pair_index(u, v)
            a_masks.append(m)
        b_masks = []
        for combo in combinations(range(n), b):
            m = 0
            for u, v in combinations(combo, 2):
                m |= 1 << EdgeColoring.pair_index(u, v)
            b_masks.append(m)
        free_bits = None
        for bits in range(1 << npairs):
            if not _has_mono(n, bits, a_masks, b_masks):
                free_bits = bits
                break
        if free_bits is None:
            return RamseyExactResult((a, b), n, last_free)
        last_free = EdgeColoring.from_pair_bits(n, free_bits)
    raise AssertionError("upper bound violated")  # unreachable


@dataclass(frozen=True)
class DichotomyResult:
    """Outcome of the clique-or-anticlique extraction on a vertex set."""

    kind: str  # "clique" | "anticlique" | "small"
    vertices: Optional[tuple[int, ...]]
    bound: int  # ramsey_upper([a+1, b+1])

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": None if self.vertices is None else list(self.vertices),
            "bound": self.bound,
        }


def dichotomy_extract(c: CoherentSpace, x: Iterable[int],
                      a: int, b: int) -> DichotomyResult:
    """Either a clique of size a+1 inside x, an anticlique of size b+1, or a
    verified "small" verdict (#x below the two-color Ramsey bound for
    [a+1, b+1]).  Exactly one outcome; cliques take priority."""
    xset = frozenset(x)
    bound = ramsey_upper((a + 1, b + 1))
    cl = max_clique(c, xset)
    if len(cl) >= a + 1:
        return DichotomyResult("clique", tuple(sorted(cl))[:a + 1], bound)
    ac = max_anticlique(c, xset)
    if len(ac) >= b + 1:
        return DichotomyResult("anticlique", tuple(sorted(ac))[:b + 1], bound)
    if len(xset) >= bound:
        raise AssertionError(
            "set at the Ramsey bound with neither witness")  # impossible
    return DichotomyResult("small", None, bound)


def tensor_anticlique_extract(
    c1: CoherentSpace, c2: CoherentSpace,
    r_prime: Iterable[tuple[int, int]],
    x: Optional[Iterable[int]] = None,
) -> tuple[int, ...]:
    """From an anticlique r' of tensor(c1, c2), build an anticlique of c2 of
    size omega(c1, pi1(r')).

    Takes a maximum clique x of c1 inside pi1(r') (computed when not
    supplied), then picks the smallest fiber element over each of its
    vertices; the chosen elements are pairwise incoherent in c2 because r'
    is a tensor anticlique.
    """
    pairs = sorted(set((int(p), int(q)) for p, q in r_prime))
    for p, q in pairs:
        c1.index(p), c2.index(q)  # membership check
    for (p, q), (p2, q2) in combinations(pairs, 2):
        if c1.coherent(p, p2) and c2.coherent(q, q2):
            raise SpaceError(
                f"not a tensor anticlique: ({p},{q}) and ({p2},{q2}) "
                "are coherent componentwise")
    proj1 = frozenset(p for p, _ in pairs)
    if x is None:
        x = max_clique(c1, proj1)
    else:
        x = frozenset(x)
        if not x <= proj1:
            raise SpaceError("supplied clique not within pi1(r')")
    chosen = []
    for p in sorted(x):
        fiber = [q for (pp, q) in pairs if pp == p]
        chosen.append(min(fiber))
    result = tuple(chosen)
    assert len(set(result)) == len(x)
    for q, q2 in combinations(result, 2):
        assert not c2.coherent(q, q2)
    return result
