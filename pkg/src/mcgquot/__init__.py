"""mcgquot: exact verification of smallest-quotient arithmetic for mapping
class groups.

The package computes exact orders of finite simple groups, enumerates all
simple groups below a bound, runs the genus-g exclusion pipeline whose sole
survivor is the rank-g symplectic group over GF(2), bounds p-ranks through
cyclotomic multiplicities, and exhaustively verifies an invariant-flag
construction and braid-relation identities over small finite fields.
"""

from .catalog import (
    GroupId,
    InvalidParameters,
    SporadicRecord,
    UnknownGroup,
    canonicalize,
    center_divisor,
    format_group_name,
    is_simple,
    order,
    parse_group_name,
    sp_order,
    sporadic_table,
)
from .degrees import mcg_min_index, min_perm_degree, natural_proj_dim
from .enumeration import enumerate_simple_below, g_of
from .ff import FiniteField, field_of_size, get_field
from .flags import (
    Flag,
    braid_check,
    centralizer,
    char_poly,
    eigen_data,
    golden_braid_scan,
    invariant_flag,
    scan_flags,
    triple_product_scan,
)
from .intpoly import CycloFactorization, IntPoly, cyclotomic, factor_into_cyclotomics
from .pipeline import (
    ExclusionReport,
    Verdict,
    classify,
    run_pipeline,
    verify_alt_chain,
    verify_exceptional_inequalities,
)
from .rankbounds import multiplicative_order, p_rank_upper_bound, sporadic_rank_excluded

__version__ = "0.1.0"

__all__ = [
    "CycloFactorization",
    "ExclusionReport",
    "FiniteField",
    "Flag",
    "GroupId",
    "IntPoly",
    "InvalidParameters",
    "SporadicRecord",
    "UnknownGroup",
    "Verdict",
    "braid_check",
    "canonicalize",
    "center_divisor",
    "centralizer",
    "char_poly",
    "classify",
    "cyclotomic",
    "eigen_data",
    "enumerate_simple_below",
    "factor_into_cyclotomics",
    "field_of_size",
    "format_group_name",
    "g_of",
    "get_field",
    "golden_braid_scan",
    "invariant_flag",
    "is_simple",
    "mcg_min_index",
    "min_perm_degree",
    "multiplicative_order",
    "natural_proj_dim",
    "order",
    "p_rank_upper_bound",
    "parse_group_name",
    "run_pipeline",
    "scan_flags",
    "sp_order",
    "sporadic_rank_excluded",
    "sporadic_table",
    "triple_product_scan",
    "verify_alt_chain",
    "verify_exceptional_inequalities",
]
