import random

import pytest

from bei.graphs import Graph, complete_graph, path_graph
from bei.ideal import SimplicialComplex, stanley_reisner_complex
from bei.matroid import is_matroid, matroid_path_theorem_check


def test_triangle_witness_frozen():
    cx = stanley_reisner_complex(complete_graph(3))
    assert [cx.names(f) for f in cx.facets] == [
        ("x1", "x2", "x3", "y1"),
        ("x2", "x3", "y1", "y2"),
        ("x3", "y1", "y2", "y3"),
    ]
    flag, triple = is_matroid(cx, witness=True)
    assert not flag
    assert triple == (("x1", "x2", "x3", "y1"),
                      ("x3", "y1", "y2", "y3"), "x2")


def test_single_facet_and_empty():
    cx = SimplicialComplex(list("abcd"), [0b0111])
    assert is_matroid(cx)
    assert is_matroid(cx, witness=True) == (True, None)
    with pytest.raises(ValueError):
        is_matroid(SimplicialComplex([], []))


def test_uniform_matroid():
    # all 2-subsets of a 4 set: U_{2,4}
    masks = [0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]
    assert is_matroid(SimplicialComplex(list("abcd"), masks))
    # dropping {c,d} just makes c and d parallel, still a matroid
    assert is_matroid(SimplicialComplex(list("abcd"), masks[:-1]))
    # two disjoint facets can never exchange
    assert not is_matroid(SimplicialComplex(list("abcd"), [0b0011, 0b1100]))


def test_facet_order_is_normalized():
    rng = random.Random(3)
    cx = stanley_reisner_complex(complete_graph(3))
    masks = list(cx.facets)
    rng.shuffle(masks)
    again = SimplicialComplex(cx.ground, masks)
    assert again.facets == cx.facets
    assert is_matroid(again, witness=True) == is_matroid(cx, witness=True)


def test_paths_are_matroidal_labels_matter():
    for n in range(2, 7):
        assert is_matroid(stanley_reisner_complex(path_graph(n)))
    # the same path class labelled 2-1-3 loses exchange
    bad = Graph(3, [(1, 2), (1, 3)])
    cx = stanley_reisner_complex(bad)
    assert len(cx.facets) == 4
    assert not is_matroid(cx)


def test_path_theorem_exhaustive():
    report = matroid_path_theorem_check(5)
    assert report["violations"] == []
    assert report["checked"] == 30
    # exactly the path classes, n = 2..5
    assert sorted(report["matroids"]) == ["A_", "BW", "CL", "DBg"]


def test_path_theorem_refuses_large_n():
    with pytest.raises(ValueError):
        matroid_path_theorem_check(8)
