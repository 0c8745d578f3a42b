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
    relabel,
    canonical_graph6,
)
from bei.ideal import (
    SimplicialComplex,
    initial_ideal,
    support_mask,
    stanley_reisner_complex,
    hilbert_numerator,
    hilbert_function,
)
from bei.betti import (
    BettiTable,
    reduced_homology_ranks,
    hochster_betti,
    hochster_entry,
    koszul_betti,
    cm_reduction,
    derived_invariants,
    is_level,
    is_pseudo_gorenstein,
    is_gorenstein_path,
    artinian_reduction_Fm,
    socle_degrees,
    linear_strand_check,
    ohtani_injection_check,
)
from bei.enumeration import enumerate_connected

from oracles import taylor_betti

P = 32003


# ---------------------------------------------------------------------------
# simplicial homology
# ---------------------------------------------------------------------------

def test_homology_circle():
    # boundary of a triangle: three edges, no 2-face
    cx = SimplicialComplex(["a", "b", "c"], [0b011, 0b101, 0b110])
    ranks = reduced_homology_ranks(cx, P)
    assert ranks.get(1) == 1
    assert not ranks.get(0)


def test_homology_simplex_and_points():
    full = SimplicialComplex(list("abc"), [0b111])
    assert not any(reduced_homology_ranks(full, P).values())
    two = SimplicialComplex(["a", "b"], [0b01, 0b10])
    assert reduced_homology_ranks(two, P).get(0) == 1


def test_homology_rejects_composite_characteristic():
    cx = SimplicialComplex(["a"], [0b1])
    with pytest.raises(ValueError):
        reduced_homology_ranks(cx, 6)


# ---------------------------------------------------------------------------
# monomial engine
# ---------------------------------------------------------------------------

def test_hochster_small_tables():
    assert hochster_betti(stanley_reisner_complex(path_graph(2)), P).entries == {
        (0, 0): 1, (1, 2): 1}
    assert hochster_betti(stanley_reisner_complex(path_graph(3)), P).entries == {
        (0, 0): 1, (1, 2): 2, (2, 4): 1}
    t = hochster_betti(stanley_reisner_complex(complete_graph(3)), P)
    assert t.pd == 2 and t.reg == 1 and t.get(2, 3) == 2


def test_hochster_against_taylor_resolution():
    for n in range(2, 5):
        for G in enumerate_connected(n):
            gens = [support_mask(m) for m in initial_ideal(G)]
            expect = taylor_betti(gens, 2 * n, P)
            got = hochster_betti(stanley_reisner_complex(G), P).entries
            assert got == expect, G.edges()


def test_hochster_entry_matches_full_table():
    for G in [complete_graph(3), path_graph(4), cycle_graph(5), build_Fm(3)]:
        cx = stanley_reisner_complex(G)
        full = hochster_betti(cx, P)
        for i in range(full.pd + 2):
            for d in range(full.reg + 2):
                if i + d <= 2 * G.n:
                    assert hochster_entry(cx, i, i + d, P) == full.get(i, i + d)


# ---------------------------------------------------------------------------
# exact engine
# ---------------------------------------------------------------------------

def test_koszul_small_tables():
    assert koszul_betti(path_graph(2), P).entries == {(0, 0): 1, (1, 2): 1}
    # complete intersection: both engines literally agree
    assert koszul_betti(path_graph(3), P).entries == \
        hochster_betti(stanley_reisner_complex(path_graph(3)), P).entries
    t = koszul_betti(complete_graph(3), P)
    assert t.get(1, 2) == 3 and t.get(2, 3) == 2 and t.pd == 2


def test_koszul_window_refusal():
    with pytest.raises(ValueError):
        koszul_betti(path_graph(3), P, window={(3, 9)})


def test_dominance_and_corners_sample():
    rng = random.Random(13)
    graphs = enumerate_connected(5)
    for G in rng.sample(graphs, 8):
        mono = hochster_betti(stanley_reisner_complex(G), P)
        exact = koszul_betti(G, P)
        for (i, j), v in exact.entries.items():
            assert v <= mono.get(i, j)
        assert exact.pd == mono.pd and exact.reg == mono.reg
        assert [(i, j) for i, j, _ in exact.extremal()] == \
               [(i, j) for i, j, _ in mono.extremal()]


def test_euler_characteristic_consistency():
    # alternating column sums agree between the engines (same Hilbert
    # function on both sides of the degeneration)
    for G in [complete_graph(4), cycle_graph(4), build_Fm(2)]:
        mono = hochster_betti(stanley_reisner_complex(G), P)
        exact = koszul_betti(G, P)
        for j in range(max(j for _, j in mono.entries) + 1):
            s_mono = sum((-1) ** i * mono.get(i, j) for i in range(mono.pd + 1))
            s_exact = sum((-1) ** i * exact.get(i, j) for i in range(exact.pd + 1))
            assert s_mono == s_exact


def test_derived_invariants_examples():
    G = path_graph(3)
    cx = stanley_reisner_complex(G)
    inv = derived_invariants(koszul_betti(G, P), cx)
    assert inv["dim"] == 4 and inv["depth"] == 4 and inv["is_CM"]
    assert inv["extremal_betti"] == [(2, 4, 1)]
    K = complete_graph(3)
    inv = derived_invariants(koszul_betti(K, P), stanley_reisner_complex(K))
    assert inv["is_CM"] and inv["extremal_betti"] == [(2, 3, 2)]


def test_trivial_table():
    t = koszul_betti(Graph(1, []), P)
    assert t.entries == {(0, 0): 1}


# ---------------------------------------------------------------------------
# certified reduction and socle data
# ---------------------------------------------------------------------------

def test_cm_reduction_known_socles():
    assert cm_reduction(path_graph(4), P).socle_dims() == {3: 1}
    assert cm_reduction(complete_graph(4), P).socle_dims() == {1: 3}
    assert cm_reduction(build_Fm(3), P).socle_dims() == {3: 5}
    assert cm_reduction(build_Hi(2, 3, 1), P).socle_dims() == {2: 6}
    assert cm_reduction(build_G1(1), P).socle_dims() == {2: 4, 3: 1}
    assert cm_reduction(build_G2(1), P).socle_dims() == {2: 4, 3: 1}


def test_cm_reduction_refuses_non_cm():
    assert cm_reduction(Graph(4, [(1, 2), (1, 3), (1, 4)]), P) is None
    assert cm_reduction(cycle_graph(4), P) is None


def test_cm_reduction_deterministic():
    a = cm_reduction(build_Fm(3), P).socle_dims()
    b = cm_reduction(build_Fm(3), P).socle_dims()
    assert a == b


def test_socle_matches_last_betti_column():
    # for a CM quotient the socle dimensions of the reduction are the Betti
    # numbers in the last homological column
    for G in [path_graph(4), complete_graph(4), build_Hi(1, 2, 1)]:
        exact = koszul_betti(G, P)
        soc = cm_reduction(G, P).socle_dims()
        assert soc == {j - exact.pd: v for (i, j), v in exact.entries.items()
                       if i == exact.pd}


def test_level_and_pseudo_gorenstein_flags():
    assert is_level(complete_graph(5), P)
    assert is_level(path_graph(4), P) and is_pseudo_gorenstein(path_graph(4), P)
    assert is_level(build_Fm(3), P) and not is_pseudo_gorenstein(build_Fm(3), P)
    assert is_pseudo_gorenstein(build_G1(1), P) and not is_level(build_G1(1), P)
    assert not is_level(cycle_graph(4), P)  # not CM
    assert is_gorenstein_path(relabel(path_graph(5), [3, 1, 4, 2, 5]))
    assert not is_gorenstein_path(complete_graph(4))


# ---------------------------------------------------------------------------
# the fan Artinian quotient
# ---------------------------------------------------------------------------

def test_artinian_reduction_m3():
    A = artinian_reduction_Fm(3)
    assert A.nvars == 5
    assert {d: len(v) for d, v in A.basis.items()} == {0: 1, 1: 5, 2: 9, 3: 5}
    assert A.length() == 20
    assert socle_degrees(A) == [3, 3, 3, 3, 3]
    # x1 x2 x3 is a socle element
    m = (1, 1, 1, 0, 0)
    assert m in A.basis[3]
    nxt = set(A.basis.get(4, ()))
    for v in range(5):
        e = list(m)
        e[v] += 1
        assert tuple(e) not in nxt


def test_artinian_reduction_socle_pure_and_matches_exact():
    for m in (3, 4):
        soc = socle_degrees(artinian_reduction_Fm(m))
        assert set(soc) == {3}
        assert len(soc) == cm_reduction(build_Fm(m), P).socle_dims()[3]


def test_artinian_reduction_rejects_small_m():
    with pytest.raises(ValueError):
        artinian_reduction_Fm(2)


# ---------------------------------------------------------------------------
# linear strand
# ---------------------------------------------------------------------------

def test_linear_strand_small():
    for G in [complete_graph(3), path_graph(3), path_graph(4), complete_graph(4)]:
        assert linear_strand_check(G, P)


def test_linear_strand_exhaustive_n4():
    for n in range(2, 5):
        for G in enumerate_connected(n):
            assert linear_strand_check(G, P), G.edges()


# ---------------------------------------------------------------------------
# cut-vertex exact sequence
# ---------------------------------------------------------------------------

def test_ohtani_tail_explained_by_middle():
    # the strict tail inequality can fail, but only when the middle Tor is
    # nonzero, and never by more than the middle contributes
    found_strict_violation = False
    for n in range(2, 6):
        for G in enumerate_connected(n):
            for (v, j, left, right, mid) in ohtani_injection_check(G, P):
                assert mid > 0
                assert left <= right + mid
                found_strict_violation = True
    assert found_strict_violation  # DBw and DJk at n=5


def test_ohtani_strict_on_cm_example():
    # decomposable CM example: the tail injects cleanly at every cut vertex
    assert ohtani_injection_check(path_graph(5), P) == []
    tri = Graph(5, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5)])
    assert ohtani_injection_check(tri, P) == []
