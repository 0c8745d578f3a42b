import pytest

from bei.graphs import canonical_graph6, emit_graph6, is_connected
from bei.enumeration import enumerate_connected, connected_count

from oracles import all_connected_classes, nx_isomorphic


def test_counts_match_published_sequence():
    for n, count in {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}.items():
        assert len(enumerate_connected(n)) == count
        assert connected_count(n) == count


def test_classes_match_brute_force():
    for n in range(1, 6):
        reps = enumerate_connected(n)
        brute = all_connected_classes(n)
        assert len(reps) == len(brute)
        for G in reps:
            hits = sum(1 for H in brute if nx_isomorphic(G, H))
            assert hits == 1, G.edges()


def test_representatives_are_canonical_and_sorted():
    words = []
    for G in enumerate_connected(5):
        assert is_connected(G)
        w = emit_graph6(G)
        assert w == canonical_graph6(G)
        words.append(w)
    assert words == sorted(words)
    assert len(set(words)) == len(words)


def test_range_check():
    with pytest.raises(ValueError):
        enumerate_connected(0)
    with pytest.raises(ValueError):
        enumerate_connected(9)
