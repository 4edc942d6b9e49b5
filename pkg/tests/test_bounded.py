import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cohfin.bounded import (
    check_clique_dual_law,
    check_incoherence_closure_laws,
    closure_m,
    dual_m,
    fin_k,
    min_anticlique_cover_bounds,
)
from cohfin.spaces import (
    EnumerationCapError,
    SetFamily,
    all_spaces,
    alpha,
    cliques,
    complete,
    discrete,
    disjoint_kn,
    dual,
    random_space,
)
from oracles import brute_dual_m, brute_fin_k, powerset


def family(web_size=4):
    """Hypothesis strategy: a random family over web 0..web_size-1."""
    web = tuple(range(web_size))
    subset = st.frozensets(st.sampled_from(web) if web_size else st.nothing(),
                           max_size=web_size)
    return st.frozensets(subset, max_size=6).map(
        lambda ms: SetFamily(web, ms))


# -- dual_m ---------------------------------------------------------------------

def test_dual_of_empty_family_is_powerset():
    f = SetFamily((0, 1, 2), frozenset())
    assert len(dual_m(f, 1)) == 8


def test_dual_of_k2_cliques_is_anticliques():
    d = dual_m(cliques(complete(2)), 1)
    assert d.sorted_members() == [[], [0], [1]]


def test_dual_with_large_bound_is_powerset():
    web = (0, 1, 2, 3)
    f = SetFamily(web, frozenset({frozenset(web)}))
    assert len(dual_m(f, len(web))) == 16


@given(family(), st.integers(1, 3))
def test_dual_m_matches_bruteforce(f, m):
    got = dual_m(f, m).members
    want = brute_dual_m(f.web, f.members, m)
    assert got == want


@given(family(), st.integers(1, 3))
def test_dual_m_antitone(f, m):
    sub = SetFamily(f.web, frozenset(list(f.members)[: len(f.members) // 2]))
    assert dual_m(f, m).members <= dual_m(sub, m).members


@given(family(), st.integers(1, 3))
def test_closure_laws(f, m):
    cl = closure_m(f, m)
    assert f.members <= cl.members
    assert closure_m(cl, m).members == cl.members
    assert dual_m(cl, m).members == dual_m(f, m).members


def test_cliques_closed_under_closure_1_exhaustive():
    for n in range(1, 5):
        for c in all_spaces(n):
            fam = cliques(c)
            assert closure_m(fam, 1).members == fam.members


def test_dual_1_of_cliques_is_cliques_of_dual_exhaustive():
    for n in range(1, 5):
        for c in all_spaces(n):
            assert dual_m(cliques(c), 1).members == cliques(dual(c)).members


def test_dual_m_cap():
    f = SetFamily(tuple(range(8)), frozenset())
    with pytest.raises(EnumerationCapError):
        dual_m(f, 1, cap=6)


# -- fin_k ----------------------------------------------------------------------

def test_fin_k_full_threshold_is_powerset():
    c = discrete(3)
    assert len(fin_k(c, 3)) == 8


def test_fin_k_k3():
    assert len(fin_k(complete(3), 1)) == 8


def test_fin_k_discrete_three():
    assert fin_k(discrete(3), 1).sorted_members() == [[], [0], [1], [2]]


@given(st.integers(0, 3))
def test_fin_k_matches_bruteforce(k):
    rng = random.Random(k)
    for _ in range(10):
        c = random_space(rng.randint(1, 5), rng)
        assert fin_k(c, k).members == brute_fin_k(c, k)


# -- law suites -------------------------------------------------------------------

def test_closure_laws_k3_pass():
    rep = check_incoherence_closure_laws(complete(3), 1)
    assert rep.passed
    assert all(rep.params["items"].values())


def test_union_lands_in_doubled_threshold():
    c = discrete(4)
    f2 = fin_k(c, 2)
    assert frozenset({0, 1}) in f2 and frozenset({2, 3}) in f2
    assert alpha(c, {0, 1, 2, 3}) == 4  # needs the doubled threshold
    assert frozenset({0, 1, 2, 3}) in fin_k(c, 4)


def test_k_zero_fails_cliques_item():
    rep = check_incoherence_closure_laws(complete(2), 0)
    assert not rep.passed
    assert not rep.params["items"]["cliques_included"]
    assert rep.witness["item"] == "cliques_included"


def test_closure_laws_random_sweep():
    rng = random.Random(5)
    for _ in range(30):
        c = random_space(rng.randint(1, 7), rng)
        for k in (1, 2):
            assert check_incoherence_closure_laws(c, k, rng).passed


def test_clique_dual_law_exhaustive_small():
    for n in range(1, 5):
        for c in all_spaces(n):
            for m in (1, 2):
                assert check_clique_dual_law(c, m).passed


def test_clique_dual_law_k2():
    # both sides reduce to the anticliques of K2
    rep = check_clique_dual_law(complete(2), 1)
    assert rep.passed
    assert dual_m(cliques(complete(2)), 1).members == \
        fin_k(dual(complete(2)), 1).members == \
        {frozenset(), frozenset({0}), frozenset({1})}


def test_clique_dual_law_discrete():
    for n in (1, 3):
        lhs = dual_m(cliques(discrete(n)), 2)
        assert len(lhs) == 2 ** n


# -- cover bounds -----------------------------------------------------------------

def test_cover_bounds_disjoint_kn():
    for n in (2, 3, 4):
        assert min_anticlique_cover_bounds(disjoint_kn(n)) == (n, n)


def test_cover_bounds_complete():
    assert min_anticlique_cover_bounds(complete(5)) == (5, 5)


def test_cover_bounds_discrete():
    assert min_anticlique_cover_bounds(discrete(7)) == (1, 1)


def test_cover_bounds_ordered():
    rng = random.Random(9)
    for _ in range(20):
        c = random_space(rng.randint(1, 7), rng)
        lo, hi = min_anticlique_cover_bounds(c)
        assert lo <= hi
        # verify the upper bound is feasible: greedy cover really covers
        assert hi <= c.n


def test_alpha_subadditive():
    rng = random.Random(2)
    for _ in range(30):
        c = random_space(6, rng)
        x = frozenset(v for v in c.web if rng.random() < 0.5)
        y = frozenset(v for v in c.web if rng.random() < 0.5)
        assert alpha(c, x | y) <= alpha(c, x) + alpha(c, y)
