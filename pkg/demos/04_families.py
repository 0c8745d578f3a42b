"""
Named families and their recognizers
====================================

The interesting quotients organize into constructed families: fans F_m,
iterated cones H_i(r, s) and G_i^j, and chains of fans glued by the
leaf-pinch operation.  Each family has a recognizer that inverts the
construction, and a predicted homological signature.
"""

from bei import (
    build_Fm, build_Hi, build_G1, build_G2, chain, emit_graph6,
    initial_ideal, artinian_reduction_Fm, socle_degrees, cm_reduction,
    recognize_Hi, recognize_Gij, recognize_bipartite_level,
    recognize_bipartite_pg, hochster_entry, stanley_reisner_complex,
)

P = 32003

# fans: bipartite, level, regularity 3 from m = 3 on
for m in (3, 4, 5):
    F = build_Fm(m)
    print(f"F_{m} = {emit_graph6(F)}: |ini| = {len(initial_ideal(F))}, "
          f"socle degrees {sorted(set(socle_degrees(artinian_reduction_Fm(m))))}")

# H_i(r, s): exactly the Cohen-Macaulay quotients of regularity 2
H = build_Hi(2, 3, 2)
print("\nH_2(2, 3) =", emit_graph6(H), "recognized as", recognize_Hi(H),
      "socle", cm_reduction(H, P).socle_dims())

# G_i^j: the pseudo-Gorenstein regularity-3 cones; socle is split with a
# single top element
for builder, j in ((build_G1, 1), (build_G2, 2)):
    G = builder(2)
    print(f"G_2^{j} = {emit_graph6(G)}: recognized as",
          recognize_Gij(G), "socle", cm_reduction(G, P).socle_dims())

# chains of fans pinched to [3, 4, ..., 4, 3] are the bipartite
# pseudo-Gorenstein graphs; plain fans are the bipartite level ones
C = chain([3, 3])
print(f"\nchain([3,3]) on {C.n} vertices:",
      "pG-recognized", recognize_bipartite_pg(C),
      "level-recognized", recognize_bipartite_level(C))

# its last resolution column, read entry by entry from the monomial
# engine: two separated degrees (so not level), top value 1 (so pG)
cx = stanley_reisner_complex(C)
col = {j: hochster_entry(cx, 8, j, P) for j in (12, 13, 14)}
print("last-column entries beta_{8,j}:", col)
