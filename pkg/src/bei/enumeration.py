"""Isomorph-free enumeration of connected graphs.

Augmentation: every connected graph on k+1 vertices arises from a
connected graph on k vertices by attaching a new vertex along a nonempty
neighborhood (delete any non-cut vertex to see this), so growing each
canonical representative by all 2^k - 1 attachments and deduplicating by
canonical word is exhaustive.  Representatives come out canonically
labelled, sorted by word.

Class counts for n = 1..8: 1, 1, 2, 6, 21, 112, 853, 11117.
"""

from __future__ import annotations

from .graphs import Graph, _bits, canonical_graph6, parse_graph6


MAX_N = 8

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def enumerate_connected(n):
    """All connected graphs on n vertices up to isomorphism, canonically
    labelled, in sorted canonical-word order."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be between 1 and {MAX_N}")
    reps = [Graph(1, [])]
    for k in range(1, n):
        seen = {}
        for H in reps:
            base = H.edges()
            for sub in range(1, 1 << k):
                edges = base + [(v, k + 1) for v in _bits(sub)]
                G = Graph(k + 1, edges)
                word = canonical_graph6(G)
                if word not in seen:
                    seen[word] = parse_graph6(word)
        reps = [seen[w] for w in sorted(seen)]
    return reps


def connected_count(n):
    """Number of isomorphism classes of connected graphs on n vertices,
    from the published sequence; used as a generation self-check."""
    return CONNECTED_COUNTS[n]
