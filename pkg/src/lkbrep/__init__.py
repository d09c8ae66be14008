"""Exact computation of the Lawrence-Krammer-Bigelow representation of the
braid group, of Salvetti complexes of real line arrangements, and of the
twisted homology that carries the representation."""

from .ring import (
    LaurentPolynomial,
    RationalFunction,
    UnsupportedDivisorError,
    lp_add,
    lp_eval,
    lp_mul,
    lp_try_div_exact,
    rf_arith,
    rf_eq,
    rf_is_laurent,
    ONE,
    X,
    Y,
    ZERO,
)
from .linalg import (
    Matrix,
    VerificationError,
    field_det,
    field_inv,
    field_kernel,
    field_rank,
    field_solve,
    int_smith,
    int_solve,
    mat_mul,
)
from .complexes import (
    CellComplex,
    Chain,
    TwistedComplex,
    sal_an_mod_sigma2,
    sal_fn,
    word_to_chain,
)
from .homology import (
    e_cycle,
    e_coordinates,
    h1_fn,
    integral_x,
    kernel_rank,
    reduce_to_integral_basis,
    v_chain,
    v_membership,
    verify_eta_triangular,
)
from .action import (
    BraidWord,
    chain_action,
    check_braid_relations,
    eigen_structure_check,
    fork_basis_action,
    fork_chain,
    fork_in_e_basis,
    h1_action,
    homology_action,
    lkb_generator,
    lkb_word,
    s_edge_word,
    verify_fork_boundary,
)
from .arrangement import (
    Line,
    build_facets,
    build_salvetti,
    cyclic_order_at_vertex,
    salvetti_h1,
    salvetti_twisted_complex,
)

__all__ = [
    "BraidWord",
    "CellComplex",
    "Chain",
    "LaurentPolynomial",
    "Line",
    "Matrix",
    "ONE",
    "RationalFunction",
    "TwistedComplex",
    "UnsupportedDivisorError",
    "VerificationError",
    "X",
    "Y",
    "ZERO",
    "build_facets",
    "build_salvetti",
    "chain_action",
    "check_braid_relations",
    "cyclic_order_at_vertex",
    "e_coordinates",
    "e_cycle",
    "eigen_structure_check",
    "field_det",
    "field_inv",
    "field_kernel",
    "field_rank",
    "field_solve",
    "fork_basis_action",
    "fork_chain",
    "fork_in_e_basis",
    "h1_action",
    "h1_fn",
    "homology_action",
    "int_smith",
    "int_solve",
    "integral_x",
    "kernel_rank",
    "lkb_generator",
    "lkb_word",
    "lp_add",
    "lp_eval",
    "lp_mul",
    "lp_try_div_exact",
    "mat_mul",
    "reduce_to_integral_basis",
    "rf_arith",
    "rf_eq",
    "rf_is_laurent",
    "s_edge_word",
    "sal_an_mod_sigma2",
    "sal_fn",
    "salvetti_h1",
    "salvetti_twisted_complex",
    "v_chain",
    "v_membership",
    "verify_eta_triangular",
    "verify_fork_boundary",
    "word_to_chain",
]

__version__ = "0.1.0"
