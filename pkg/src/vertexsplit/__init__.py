"""Vertex splittable monomial ideals and vertex decomposable simplicial
complexes, with exact graded Betti numbers.

The package recognizes both structures with replayable certificates,
computes Betti tables three ways (a homological oracle, the split
recursion and the linear-quotient set formula) and exposes theorem-check
suites that compare them on enumerated and sampled corpora.  A compiled
kernel accelerates the homological oracle when available; see
`vertexsplit.kernel` for backend selection.
"""

from . import decomposition, graphs, homology, kernel, splitting
from .betti import BettiTable, format_flat, format_grid, pd, quotient_table, reg
from .complexes import (SimplicialComplex, alexander_dual_complex, bight,
                        complex_of_ideal, deletion, dual_facet_ideal,
                        empty_complex, from_facets, induced_subcomplex,
                        is_pure, is_simplex, link, simplex,
                        stanley_reisner_ideal)
from .decomposition import (DecompositionNode, SimplexLeaf, check_pd_equals_bight,
                            is_shedding, pd_reg_recursive, vertex_decomposable)
from .graphs import (Graph, chordal_split, complement, cover_betti_recursive,
                     cover_ideal, cycle_graph, dual_complex_equivalence,
                     edge_ideal, froberg_equivalence, graph,
                     independence_complex, clique_complex, is_chordal,
                     is_scm_bipartite, path_graph, simplicial_vertex)
from .homology import (FieldChoice, QQ, betti_table, has_linear_resolution,
                       hochster_betti, is_cohen_macaulay, koszul_betti,
                       parse_field, reduced_homology_dims)
from .monomials import (Monomial, MonomialIdeal, colon, divides, intersect,
                        is_squarefree, is_subideal, minimalize, x_partition)
from .splitting import (LinearQuotientOrder, SplitLeaf, SplitNode,
                        betti_from_sets, betti_recursive,
                        find_linear_quotients, quotient_order_from_split,
                        validate_split_tree, verify_betti_splitting,
                        vertex_split)

__version__ = "0.1.0"


def clear_caches() -> None:
    """Reset every memo table (split/decomposition certificates, Betti
    tables, homology)."""
    splitting.clear_caches()
    decomposition.clear_caches()
    homology.clear_caches()
