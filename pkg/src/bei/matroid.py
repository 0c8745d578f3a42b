"""Basis exchange checking for facet complexes.

A complex is a matroid when for every ordered facet pair (F, F') and every
i in F some j in F' makes (F \\ {i}) + {j} a facet again.  The check is a
plain triple loop; what matters for reproducibility is that the reported
counterexample is the lexicographically least violating triple in the
facet order the complex itself fixes (sorted position tuples).
"""

from __future__ import annotations

import itertools

from .graphs import is_path, path_graph, canonical_graph6, _bits
from .ideal import stanley_reisner_complex
from .enumeration import enumerate_connected


def is_matroid(cx, witness=False):
    """Exchange property over all ordered facet pairs.

    With witness=True returns (flag, triple) where triple is None on
    success and otherwise the first violating (F, F', i) in facet order,
    as tuples of ground names with i a ground name.
    """
    if not cx.facets:
        raise ValueError("facet list is empty")
    facet_set = set(cx.facets)
    for F, Fp in itertools.product(cx.facets, repeat=2):
        for i in _bits(F):
            ibit = 1 << (i - 1)
            if Fp & ibit:
                continue
            stripped = F & ~ibit
            if not any(stripped | (1 << (j - 1)) in facet_set
                       for j in _bits(Fp & ~F)):
                if witness:
                    return False, (cx.names(F), cx.names(Fp),
                                   cx.names(ibit)[0])
                return False
    if witness:
        return True, None
    return True


def matroid_path_theorem_check(n_max, progress=False):
    """Check over every isomorphism class of connected graphs that the
    degeneration complex is a matroid exactly for paths.

    The complex depends on the vertex labelling, and the path
    characterization refers to the path labelled along its own order (a
    path labelled 2-1-3 already fails exchange), so path classes are
    tested on that labelling; other classes use the canonical
    representative.  Returns a report dict; the violations list must come
    back empty."""
    if n_max > 7:
        raise ValueError("exhaustive check is practical only up to n = 7")
    report = {"n_max": n_max, "checked": 0, "matroids": [],
              "violations": []}
    for n in range(2, n_max + 1):
        for G in enumerate_connected(n):
            if is_path(G):
                G = path_graph(n)
            flag = is_matroid(stanley_reisner_complex(G))
            if flag:
                report["matroids"].append(canonical_graph6(G))
            if flag != is_path(G):
                report["violations"].append(canonical_graph6(G))
            report["checked"] += 1
        if progress:
            print(f"n={n}: checked {report['checked']} so far, "
                  f"{len(report['violations'])} violations")
    return report
