"""
Graphs, binomial edge ideals, and their degeneration
====================================================

A quick tour: build a graph, write down the Groebner basis of its
binomial edge ideal in lex order, look at the squarefree initial ideal,
and read the combinatorics (cut sets, Stanley-Reisner facets) off it.
"""

from bei import (
    parse_graph6, emit_graph6, path_graph, cycle_graph, build_Fm,
    admissible_paths, groebner_basis, initial_ideal, mono_str,
    support_mask, cut_sets, is_unmixed, stanley_reisner_complex,
    clique_complex, f_vector, h_vector, hilbert_numerator,
)

# graph6 words round trip through the parser
G = parse_graph6("CL")
print("CL decodes to edges", G.edges(), "and encodes back to",
      emit_graph6(G))

# the fan block on six vertices: a path plus one long chord
F3 = build_Fm(3)
print("\nF_3 edges:", F3.edges())

# each admissible path contributes one Groebner basis element; for the
# fan the interesting ones run through the chord
for path in admissible_paths(F3):
    print("admissible path", path)

gb = groebner_basis(F3)
n = F3.n
print("\nGroebner basis size:", len(gb))
lead = sorted(mono_str(m, n) for m in initial_ideal(F3))
print("initial ideal:", ", ".join(lead))

# cut sets index the minimal primes; unmixed means every cut set T
# leaves exactly |T| + 1 components
for G in [path_graph(4), cycle_graph(5)]:
    cuts = cut_sets(G)
    print(f"\n{emit_graph6(G)}: cut sets",
          [c.vertices for c in cuts], "unmixed:", is_unmixed(G))

# the initial ideal is squarefree, so it has a Stanley-Reisner complex;
# purity of that complex is unmixedness again
cx = stanley_reisner_complex(path_graph(4))
print("\nDelta_< of P_4 has facets:")
for names in (cx.names(f) for f in cx.facets):
    print("  ", "".join(names))
print("pure:", cx.is_pure())

# Hilbert series data of the quotient via the degeneration
gens = [support_mask(m) for m in initial_ideal(path_graph(4))]
numer = hilbert_numerator(gens, 2 * 4)
print("\nHilbert numerator of S/J_{P_4}:", numer)
print("f-vector of the clique complex:", f_vector(clique_complex(path_graph(4))))
print("h-vector:", h_vector(numer, 2 * 4, 5))
