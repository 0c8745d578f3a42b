"""Binomial edge ideals of finite simple graphs: Groebner degenerations,
graded Betti tables by two independent engines, and homological
classification (Cohen-Macaulay, level, pseudo-Gorenstein, regularity).
"""

from .graphs import (
    Graph,
    parse_graph6,
    emit_graph6,
    parse_adjacency_text,
    canonical_graph6,
    canonical_order,
    are_isomorphic,
    components,
    is_connected,
    is_path,
    is_bipartite,
    is_complete,
    is_pk_free,
    is_cone,
    complete_graph,
    path_graph,
    cycle_graph,
    empty_graph,
    disjoint_union,
    cone,
    join,
    vertex_sum,
    neighborhood_completion,
    induced_subgraph,
    build_Fm,
    build_Hi,
    build_G1,
    build_G2,
    circ,
    chain,
    decompose,
    Decomposition,
)
from .ideal import (
    SimplicialComplex,
    admissible_paths,
    groebner_basis,
    initial_ideal,
    normal_form,
    cut_sets,
    is_unmixed,
    stanley_reisner_complex,
    clique_complex,
    minimal_nonfaces,
    f_vector,
    h_vector,
    hilbert_numerator,
    hilbert_function,
    monomial_basis,
    standard_monomials,
    mono_str,
    support_mask,
)
from .betti import (
    BettiTable,
    hochster_betti,
    hochster_entry,
    reduced_homology_ranks,
    koszul_betti,
    cm_reduction,
    GradedReduction,
    CertificateError,
    derived_invariants,
    is_level,
    is_pseudo_gorenstein,
    is_gorenstein_path,
    ArtinianQuotient,
    artinian_reduction_Fm,
    socle_degrees,
    linear_strand_check,
    ohtani_injection_check,
)
from .classify import (
    ClassificationRecord,
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
from .matroid import is_matroid, matroid_path_theorem_check
from .enumeration import enumerate_connected, connected_count
from .database import (
    PUBLISHED_CM,
    PUBLISHED_LEVEL,
    PUBLISHED_PG,
    classify_indecomposable,
    table1_report,
    find_reg4_noncone_pg,
)
from .modp import DEFAULT_PRIME

__version__ = "0.1.0"
