import random
from itertools import combinations

import pytest

from cohfin.nonuniform import (
    COH,
    INC,
    LAX,
    NEU,
    STRICT,
    Variant,
    all_neutral,
    anticliques_nu,
    cliques_nu,
    dual_nu,
    embed_coherent,
    failure_witness,
    fin_nu,
    mk_nonuniform,
    random_nonuniform,
    trichotomy_extract,
)
from cohfin.ramsey import ramsey_upper
from cohfin.spaces import SpaceError, cliques, complete, discrete, dual, path, random_space


def two_point(loop0=NEU, loop1=NEU, pair=NEU):
    return mk_nonuniform([0, 1], {(0, 0): loop0, (1, 1): loop1,
                                  (0, 1): pair})


# -- construction / dual ---------------------------------------------------------

def test_all_pairs_must_be_labeled():
    with pytest.raises(SpaceError, match="labeled"):
        mk_nonuniform([0, 1], {(0, 1): NEU})


def test_unknown_label_rejected():
    with pytest.raises(SpaceError):
        mk_nonuniform([0], {(0, 0): "maybe"})


def test_dual_involution_and_swap():
    rng = random.Random(1)
    for _ in range(30):
        nu = random_nonuniform(rng.randint(1, 5), rng)
        assert dual_nu(dual_nu(nu)) == nu
    nu = two_point(COH, INC, NEU)
    d = dual_nu(nu)
    assert d.label_of(0, 0) == INC
    assert d.label_of(1, 1) == COH
    assert d.label_of(0, 1) == NEU


def test_all_neutral_self_dual():
    nu = all_neutral(3)
    assert dual_nu(nu) == nu


# -- cliques by mode --------------------------------------------------------------

def test_lax_cliques_of_all_neutral_is_powerset():
    assert len(cliques_nu(all_neutral(3), LAX)) == 8


def test_strict_cliques_of_all_neutral_is_only_empty():
    fam = cliques_nu(all_neutral(3), STRICT)
    assert fam.sorted_members() == [[]]


def test_strict_singleton_needs_coherent_loop():
    nu = two_point(COH, NEU, INC)
    fam = cliques_nu(nu, STRICT)
    assert fam.sorted_members() == [[], [0]]


def test_singleton_never_strict_clique_and_strict_anticlique():
    rng = random.Random(3)
    for _ in range(40):
        nu = random_nonuniform(rng.randint(1, 4), rng)
        cl = cliques_nu(nu, STRICT).members
        ac = anticliques_nu(nu, STRICT).members
        for v in nu.web:
            assert not (frozenset({v}) in cl and frozenset({v}) in ac)


def test_embed_matches_ordinary_cliques():
    rng = random.Random(7)
    for _ in range(30):
        c = random_space(rng.randint(1, 5), rng)
        nu = embed_coherent(c)
        # lax cliques of the embedding = ordinary cliques (neutral loops pass)
        assert cliques_nu(nu, LAX).members == cliques(c).members
        # neutral loops block every nonempty strict clique
        assert cliques_nu(nu, STRICT).members == {frozenset()}


def test_embed_commutes_with_duality():
    for c in (complete(3), discrete(3), path(4)):
        assert dual_nu(embed_coherent(c)) == embed_coherent(dual(c))


def test_anticliques_are_cliques_of_dual():
    rng = random.Random(11)
    for _ in range(20):
        nu = random_nonuniform(rng.randint(1, 4), rng)
        for mode in (LAX, STRICT):
            assert anticliques_nu(nu, mode).members == \
                cliques_nu(dual_nu(nu), mode).members


# -- fin_nu -------------------------------------------------------------------------

def test_fin_lax_all_neutral():
    # every nonempty subset is a lax anticlique, so fin at k keeps size <= k
    fam = fin_nu(all_neutral(4), LAX, 2)
    assert all(len(x) <= 2 for x in fam)
    assert frozenset({0, 1}) in fam


def test_fin_strict_all_neutral_is_powerset():
    assert len(fin_nu(all_neutral(3), STRICT, 0)) == 8


def test_fin_rejects_negative_k():
    with pytest.raises(SpaceError):
        fin_nu(all_neutral(2), LAX, -1)


def test_fin_monotone_in_k():
    rng = random.Random(13)
    for _ in range(20):
        nu = random_nonuniform(rng.randint(1, 4), rng)
        for mode in (LAX, STRICT):
            assert fin_nu(nu, mode, 1).members <= fin_nu(nu, mode, 2).members


# -- variant failures -----------------------------------------------------------------

def test_variant_validation():
    with pytest.raises(SpaceError):
        Variant("lax", "loose")


def test_lax_lax_failure_all_neutral():
    rep = failure_witness(Variant(LAX, LAX), max_n=4, k=2)
    assert rep.passed and rep.witness["found"]
    assert rep.witness["anticlique_size"] == 3
    labels = rep.witness["space"]["labels"]
    assert set(labels.values()) == {NEU}


def test_strict_strict_failure_at_ramsey_bound():
    k = 1
    rep = failure_witness(Variant(STRICT, STRICT), max_n=10, k=k)
    assert rep.passed and rep.witness["found"]
    assert rep.witness["set_size"] == ramsey_upper((k + 1, k + 1))


def test_mixed_variant_failures_found_small():
    for variant in (Variant(LAX, STRICT), Variant(STRICT, LAX)):
        rep = failure_witness(variant, max_n=2, k=1)
        assert rep.passed and rep.witness["found"]
        assert rep.witness["failed_law"] == "clique-dual-exactness"
        # the two membership verdicts genuinely disagree
        assert rep.witness["in_dual_of_cliques"] != \
            rep.witness["in_fin_of_dual"]


def test_failure_reports_absence_honestly():
    rep = failure_witness(Variant(LAX, LAX), max_n=2, k=5, cap=4)
    assert not rep.passed
    assert not rep.witness["found"]
    rep = failure_witness(Variant(STRICT, STRICT), max_n=2, k=5, cap=4)
    assert not rep.passed
    assert not rep.witness["found"]


# -- trichotomy ---------------------------------------------------------------------

def test_trichotomy_all_neutral():
    res = trichotomy_extract(all_neutral(6), range(6), 3)
    assert res.kind == "neutral-set" and len(res.vertices) == 3


def test_trichotomy_strict_clique():
    nu = embed_coherent(complete(6))
    res = trichotomy_extract(nu, range(6), 3)
    assert res.kind == "strict-clique"


def test_trichotomy_small():
    res = trichotomy_extract(all_neutral(4), [0, 1], 3)
    assert res.kind == "small"
    assert res.bound == ramsey_upper((3, 3, 3)) == 33


def test_trichotomy_rejects_stray_vertex():
    with pytest.raises(SpaceError):
        trichotomy_extract(all_neutral(2), [0, 9], 2)


def test_trichotomy_random_soundness():
    rng = random.Random(19)
    table_kind = {"strict-clique": COH, "strict-anticlique": INC,
                  "neutral-set": NEU}
    for _ in range(40):
        nu = random_nonuniform(rng.randint(1, 7), rng)
        res = trichotomy_extract(nu, nu.web, 2)
        if res.kind == "small":
            assert nu.n < res.bound
            continue
        want = table_kind[res.kind]
        assert len(res.vertices) == 2
        for a, b in combinations(res.vertices, 2):
            assert nu.label_of(a, b) == want


def test_trichotomy_guaranteed_at_bound_s2():
    # ramsey_upper([2,2,2]) = 3: any labeling of 3 vertices yields a pair
    rng = random.Random(23)
    for _ in range(60):
        nu = random_nonuniform(3, rng)
        res = trichotomy_extract(nu, nu.web, 2)
        assert res.kind != "small"
