"""Brute-force reference implementations used to check the fast paths.

Everything here enumerates subsets directly from the definitions and stays
independent of the bitmask machinery in the package.
"""

from itertools import chain, combinations

from cohfin.spaces import CoherentSpace


def powerset(iterable):
    items = list(iterable)
    return chain.from_iterable(combinations(items, r)
                               for r in range(len(items) + 1))


def brute_is_clique(c: CoherentSpace, x) -> bool:
    return all(c.coherent(a, b) for a, b in combinations(x, 2))


def brute_cliques(c: CoherentSpace) -> set[frozenset[int]]:
    return {frozenset(x) for x in powerset(c.web) if brute_is_clique(c, x)}


def brute_omega(c: CoherentSpace, x=None) -> int:
    x = c.web if x is None else list(x)
    return max(len(s) for s in powerset(x) if brute_is_clique(c, s))


def brute_is_anticlique(c: CoherentSpace, x) -> bool:
    return all(not c.coherent(a, b) for a, b in combinations(x, 2))


def brute_alpha(c: CoherentSpace, x=None) -> int:
    x = c.web if x is None else list(x)
    return max(len(s) for s in powerset(x) if brute_is_anticlique(c, s))


def brute_dual_m(web, members, m) -> set[frozenset[int]]:
    return {frozenset(x) for x in powerset(web)
            if all(len(frozenset(x) & y) <= m for y in members)}


def brute_fin_k(c: CoherentSpace, k) -> set[frozenset[int]]:
    return {frozenset(x) for x in powerset(c.web)
            if brute_alpha(c, x) <= k}
