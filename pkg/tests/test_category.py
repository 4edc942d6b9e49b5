import math
import random

import pytest

from cohfin.category import (
    FiniteMultiset,
    Relation,
    bang_multiset_counts,
    bang_web_set,
    check_embedding_functor,
    compose,
    hom_space,
    identity,
    is_coh_morphism,
    is_finbounded_morphism,
    iso_witness_in_set,
    non_fullness_witness,
    transpose,
)
from cohfin.spaces import (
    SpaceError,
    complete,
    discrete,
    dual,
    path,
    random_space,
)


def random_relation(c, d, rng, p=0.4):
    pairs = frozenset((a, b) for a in c.web for b in d.web
                      if rng.random() < p)
    return Relation(c.web, d.web, pairs)


# -- relations ------------------------------------------------------------------

def test_relation_rejects_stray_pair():
    with pytest.raises(SpaceError):
        Relation((0, 1), (0,), frozenset({(0, 3)}))


def test_identity_and_transpose():
    r = Relation((0, 1), (0, 1, 2), frozenset({(0, 2), (1, 0)}))
    assert transpose(transpose(r)) == r
    assert compose(identity((0, 1, 2)), r) == r
    assert compose(r, identity((0, 1))) == r


def test_compose_example():
    s = Relation((0,), (0, 1), frozenset({(0, 0), (0, 1)}))
    r = Relation((0, 1), (0, 1), frozenset({(1, 0)}))
    assert compose(r, s).pairs == frozenset({(0, 0)})


def test_compose_web_mismatch():
    r = Relation((0,), (0,), frozenset())
    s = Relation((0,), (0, 1), frozenset())
    with pytest.raises(SpaceError):
        compose(r, s)


def test_compose_associative_random():
    rng = random.Random(4)
    for _ in range(50):
        a = random_space(rng.randint(1, 4), rng)
        b = random_space(rng.randint(1, 4), rng)
        c = random_space(rng.randint(1, 4), rng)
        r = random_relation(b, c, rng)
        s = random_relation(a, b, rng)
        t = random_relation(c, a, rng)
        assert compose(compose(t, r), s) == compose(t, compose(r, s))


# -- morphisms -------------------------------------------------------------------

def test_hom_space_size():
    assert hom_space(complete(2), path(3)).n == 6


def test_identity_is_coh_morphism():
    for c in (complete(3), discrete(3), path(4)):
        assert is_coh_morphism(c, c, identity(c.web))


def test_coh_morphism_implies_bounded_at_1():
    rng = random.Random(6)
    for _ in range(60):
        c = random_space(rng.randint(1, 4), rng)
        d = random_space(rng.randint(1, 4), rng)
        r = random_relation(c, d, rng)
        if is_coh_morphism(c, d, r):
            assert is_finbounded_morphism(c, d, r, 1)


def test_bounded_monotone_in_k():
    rng = random.Random(8)
    for _ in range(40):
        c = random_space(rng.randint(1, 4), rng)
        d = random_space(rng.randint(1, 4), rng)
        r = random_relation(c, d, rng)
        if is_finbounded_morphism(c, d, r, 1):
            assert is_finbounded_morphism(c, d, r, 2)


def test_empty_relation_is_morphism():
    r = Relation(complete(2).web, discrete(2).web, frozenset())
    assert is_coh_morphism(complete(2), discrete(2), r)


def test_embedding_functor_report():
    rng = random.Random(12)
    for _ in range(30):
        c = random_space(rng.randint(1, 4), rng)
        d = random_space(rng.randint(1, 4), rng)
        r = random_relation(c, d, rng)
        rep = check_embedding_functor(c, d, r)
        assert rep.passed


def test_non_fullness_witness_discrete_pair():
    w = non_fullness_witness(discrete(2), discrete(2), 2)
    assert w is not None
    assert w.pairs == frozenset({(0, 0), (0, 1)})
    assert not is_coh_morphism(discrete(2), discrete(2), w)
    assert is_finbounded_morphism(discrete(2), discrete(2), w, 2)


def test_non_fullness_needs_k_at_least_two():
    with pytest.raises(SpaceError):
        non_fullness_witness(discrete(2), discrete(2), 1)


def test_non_fullness_absent_on_singletons():
    assert non_fullness_witness(complete(1), complete(1), 2) is None


def test_non_fullness_sweep_cap():
    with pytest.raises(SpaceError, match="sweep cap"):
        non_fullness_witness(discrete(5), discrete(5), 2)


# -- exponential counting -----------------------------------------------------------

def test_multiset_validation():
    with pytest.raises(SpaceError):
        FiniteMultiset(((1, 2), (0, 1)))  # unsorted
    with pytest.raises(SpaceError):
        FiniteMultiset(((0, 0),))  # zero multiplicity
    m = FiniteMultiset(((0, 2), (3, 1)))
    assert m.support == frozenset({0, 3}) and m.degree == 3


def test_bang_web_counts_complete_vs_dual():
    for n in range(1, 9):
        assert len(bang_web_set(complete(n))) == 2 ** n
        assert len(bang_web_set(dual(complete(n)))) == n + 1


def test_bang_multiset_counts_complete():
    # supports are arbitrary subsets: count at degree d is C(n+d-1, d)
    n = 4
    for d, cnt in bang_multiset_counts(complete(n), 5):
        assert cnt == math.comb(n + d - 1, d)


def test_bang_multiset_counts_discrete():
    # only singleton supports: n multisets at every positive degree
    for d, cnt in bang_multiset_counts(discrete(3), 4):
        assert cnt == (1 if d == 0 else 3)


def test_bang_multiset_first_divergence():
    counts_k = dict(bang_multiset_counts(complete(3), 2))
    counts_d = dict(bang_multiset_counts(discrete(3), 2))
    assert counts_k[1] == counts_d[1] == 3
    assert counts_k[2] == 6 and counts_d[2] == 3


def test_iso_witness_k3_vs_dual():
    v = iso_witness_in_set(complete(3), dual(complete(3)), degree=4)
    assert not v.set_bang_equal
    assert v.set_bang_left == 8 and v.set_bang_right == 4
    assert v.multiset_first_diff_degree == 2
    d = v.to_json_dict()
    assert d["set_bang"]["equal"] is False
    assert d["multiset"]["first_diff_degree"] == 2


def test_iso_witness_identical_spaces():
    v = iso_witness_in_set(path(3), path(3))
    assert v.set_bang_equal and v.multiset_first_diff_degree is None
