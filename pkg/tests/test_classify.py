import random

import pytest

from bei.graphs import (
    Graph,
    complete_graph,
    path_graph,
    cycle_graph,
    build_Fm,
    build_Hi,
    build_G1,
    build_G2,
    chain,
    relabel,
)
from bei.ideal import is_unmixed
from bei.betti import koszul_betti, cm_reduction
from bei.classify import (
    classify,
    classify_decomposable,
    consistency_check,
    is_accessible,
    krull_dim,
    km_regularity_le2,
    recognize_Hi,
    recognize_Gij,
    recognize_bipartite_level,
    recognize_bipartite_pg,
)
from bei.enumeration import enumerate_connected

from oracles import brute_cut_sets

P = 32003


# ---------------------------------------------------------------------------
# frozen records
# ---------------------------------------------------------------------------

def test_record_P4():
    rec = classify(path_graph(4))
    assert rec.to_dict() == {
        "graph6": "CL", "n": 4, "indecomposable": False, "unmixed": True,
        "accessible": True, "CM": True, "dim": 5, "pd": 3, "reg": 3,
        "level": True, "pseudo_gorenstein": True, "gorenstein": True,
        "is_cone": False, "engine": "product", "field_char": P,
        "incomplete": False}


def test_record_named_cm_graphs():
    rec = classify(complete_graph(6))
    assert (rec.CM, rec.level, rec.pseudo_gorenstein, rec.reg) == \
        (True, True, False, 1)
    rec = classify(build_Fm(3))
    assert (rec.CM, rec.level, rec.pseudo_gorenstein, rec.reg, rec.dim) == \
        (True, True, False, 3, 7)
    rec = classify(build_Hi(1, 2, 2))
    assert (rec.CM, rec.level, rec.reg, rec.is_cone) == (True, True, 2, True)
    rec = classify(build_G1(1))
    assert (rec.CM, rec.level, rec.pseudo_gorenstein, rec.reg) == \
        (True, False, True, 3)


def test_record_non_cm_graphs():
    rec = classify(Graph(4, [(1, 2), (1, 3), (1, 4)]))
    assert not rec.unmixed and not rec.accessible and not rec.CM
    assert (rec.dim, rec.pd, rec.reg, rec.engine) == (6, 3, 2, "monomial")
    rec = classify(cycle_graph(5))
    assert not rec.unmixed and not rec.CM
    assert (rec.pd, rec.reg) == (5, 3)


def test_classify_rejects_bad_input():
    with pytest.raises(ValueError):
        classify(Graph(4, [(1, 2), (3, 4)]))
    with pytest.raises(ValueError):
        classify(path_graph(3), engine="bogus")
    with pytest.raises(ValueError):
        classify_decomposable(complete_graph(4))


def test_fast_mode_marks_non_cm_incomplete():
    rec = classify(cycle_graph(5), fast=True)
    assert rec.incomplete and rec.pd is None and rec.reg is None
    assert not rec.CM
    # CM graphs still come out complete
    rec = classify(build_Fm(3), fast=True)
    assert not rec.incomplete and rec.reg == 3


def test_engines_agree():
    for G in [path_graph(4), build_Fm(3), cycle_graph(5), build_G1(1),
              Graph(4, [(1, 2), (1, 3), (1, 4)])]:
        recs = [classify(G, engine=e) for e in ("auto", "exact", "monomial")]
        dicts = [r.to_dict() for r in recs]
        for d in dicts:
            d.pop("engine")
        assert dicts[0] == dicts[1] == dicts[2]


# ---------------------------------------------------------------------------
# combinatorial layer
# ---------------------------------------------------------------------------

def test_krull_dim():
    assert krull_dim(path_graph(4)) == 5
    for n in range(2, 7):
        assert krull_dim(complete_graph(n)) == n + 1
    assert krull_dim(cycle_graph(4)) == 5
    assert krull_dim(Graph(4, [(1, 2), (1, 3), (1, 4)])) == 6


def test_accessible_matches_brute_definition():
    for n in range(2, 6):
        for G in enumerate_connected(n):
            cuts = {frozenset(T) for T in brute_cut_sets(G)}
            expect = is_unmixed(G) and all(
                any(T - {t} in cuts for t in T) for T in cuts if T)
            assert is_accessible(G) == expect, G.edges()


def test_km_regularity_vs_exact_engine():
    assert km_regularity_le2(Graph(1, [])) == 0
    for n in range(2, 6):
        for G in enumerate_connected(n):
            km = km_regularity_le2(G)
            reg = koszul_betti(G, P).reg
            if km == ">2":
                assert reg > 2, G.edges()
            else:
                assert reg == km, G.edges()


# ---------------------------------------------------------------------------
# family recognizers
# ---------------------------------------------------------------------------

def test_recognize_Hi():
    assert recognize_Hi(path_graph(3)) == (1, 1, 1)
    assert recognize_Hi(complete_graph(3)) is None
    rng = random.Random(5)
    for (r, s, i) in [(1, 2, 1), (2, 2, 2), (1, 3, 2), (2, 3, 1), (1, 1, 3)]:
        H = build_Hi(r, s, i)
        assert recognize_Hi(H) == (r, s, i)
        perm = list(range(1, H.n + 1))
        rng.shuffle(perm)
        assert recognize_Hi(relabel(H, perm)) == (r, s, i)


def test_recognize_Gij():
    rng = random.Random(7)
    for i in (1, 2):
        G1, G2 = build_G1(i), build_G2(i)
        assert recognize_Gij(G1) == (1, i)
        assert recognize_Gij(G2) == (2, i)
        perm = list(range(1, G1.n + 1))
        rng.shuffle(perm)
        assert recognize_Gij(relabel(G1, perm)) == (1, i)
    assert recognize_Gij(complete_graph(6)) is None
    assert recognize_Gij(path_graph(4)) is None
    assert recognize_Gij(build_Hi(1, 2, 2)) is None


def test_bipartite_recognizers():
    for m in (2, 3, 4):
        assert recognize_bipartite_level(build_Fm(m))
    assert not recognize_bipartite_pg(build_Fm(3))
    assert recognize_bipartite_pg(path_graph(4))
    assert recognize_bipartite_pg(chain([3, 3]))
    assert not recognize_bipartite_level(chain([3, 3]))
    assert recognize_bipartite_pg(chain([3, 4, 3]))
    for G in [cycle_graph(6), Graph(4, [(1, 2), (1, 3), (1, 4)])]:
        assert not recognize_bipartite_level(G)
        assert not recognize_bipartite_pg(G)
    # non-bipartite input is simply rejected
    assert not recognize_bipartite_level(complete_graph(3))
    assert not recognize_bipartite_pg(complete_graph(3))


# ---------------------------------------------------------------------------
# product rule vs direct computation
# ---------------------------------------------------------------------------

def test_product_rule_matches_direct_engine():
    tri = Graph(5, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5)])
    for G in [path_graph(5), tri]:
        rec = classify(G)
        assert rec.engine == "product"
        table = koszul_betti(G, P)
        assert (rec.pd, rec.reg) == (table.pd, table.reg)
        soc = cm_reduction(G, P).socle_dims()
        assert rec.level == (len(soc) == 1)
        assert rec.pseudo_gorenstein == (soc[max(soc)] == 1)
    assert classify(tri).level and not classify(tri).pseudo_gorenstein


# ---------------------------------------------------------------------------
# theorem-vs-engine consistency
# ---------------------------------------------------------------------------

def test_consistency_exhaustive_small():
    for n in range(2, 6):
        for G in enumerate_connected(n):
            report = consistency_check(G, P)
            assert report["violations"] == [], (G.edges(), report["checks"])


def test_consistency_named_families():
    for G in [complete_graph(6), build_Fm(3), build_Hi(1, 2, 2),
              build_G1(1), build_G2(1)]:
        report = consistency_check(G, P)
        assert report["violations"] == [], report["checks"]


def test_consistency_P4_exception():
    # P_4 is pseudo-Gorenstein with regularity 3 yet decomposable, so the
    # reg-3 family characterization must not fire on it
    report = consistency_check(path_graph(4), P)
    assert report["violations"] == []
    assert report["checks"]["pG-reg3-is-Gij"] == "ok"
