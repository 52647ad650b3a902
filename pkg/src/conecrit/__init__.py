"""Critical groups of Eulerian digraphs and their iterated cones, in exact arithmetic."""

from .cones import (
    ConeReport,
    SplitReport,
    VerificationError,
    all_ones_order_check,
    block_reduction,
    cone1_group,
    cone_det_identity,
    cone_matrix,
    full_report,
    gcd_identity_check,
    h_n_group,
    order_formula,
    ses_consistency,
    splitting_analysis,
    theorem_structure,
)
from .graph import (
    Digraph,
    GraphError,
    NotEulerianError,
    cone,
    from_arcs,
    from_undirected,
    is_eulerian_connected,
    laplacian,
    reduced_laplacian,
)
from .groups import (
    AbelianGroup,
    cokernel,
    critical_group,
    direct_sum_normal_form,
    element_order_in_cokernel,
    order,
    quotient_by_all_ones,
)
from .linalg import (
    IntMatrix,
    IntPoly,
    SnfResult,
    char_poly,
    determinant,
    eval_abs_at_minus_n,
    gcd_minors_diagonal,
    smith_normal_form,
)
from .oracles import OracleBudget, arborescence_count, spanning_tree_count

__version__ = "0.1.0"
