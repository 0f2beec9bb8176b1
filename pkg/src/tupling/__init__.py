"""Simplicial complexes, r-tupling and matching complexes, exact integral
homology, and weakly Cohen-Macaulay verification harnesses."""

from .budget import BudgetExceededError
from .complexes import (
    SimplicialComplex,
    barycentric,
    boundary_complex,
    f_vector,
    faces,
    from_facets,
    join,
    link,
    simplex_complex,
    skeleton,
    xm_complex,
)
from .destab import (
    ComplexMap,
    SemiSimplicialSet,
    chain_complex_of,
    injective_words,
    is_complete_join,
    ordered_complex,
    projection_to_tupling,
    s_complex_fi,
    verify_prop44,
    verify_prop45_fi,
)
from .doubling import (
    Graph,
    TuplingComplex,
    complete_graph,
    delta,
    hypergraph_matching,
    matching_complex,
    r_tuple,
    verify_link_lemma,
    verify_tupling_matching_iso,
)
from .homology import (
    ChainComplex,
    ConnectivityReport,
    HomologyGroup,
    all_homology,
    boundary_matrix,
    chain_complex,
    component_count,
    homological_connectivity,
    homology_groups,
    meets_connectivity,
    reduced_homology,
)
from .iso import is_isomorphic
from .pi1 import edge_path_presentation, pi1_triviality
from .reports import (
    BUDGET_EXCEEDED,
    FAIL,
    INCONCLUSIVE,
    PASS_CERTIFIED,
    PASS_HOMOLOGICAL,
    combine,
    is_pass,
)
from .simplexes import EMPTY_SIMPLEX, Simplex, VertexTable
from .snf import SparseIntMatrix, rank, rank_mod_p, smith_normal_form
from .wcm import (
    WcmReport,
    check_wcm,
    verify_lemma31,
    verify_theorem1,
    verify_theorem22,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
