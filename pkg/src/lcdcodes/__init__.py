"""LCD code toolkit over GF(2) and GF(3): exact linear algebra, minimum
weight and duality checks, distance bounds, projective multiset machinery,
exhaustive searches with certificates, and bundled reference datasets."""

from .bounds import (BoundVerdict, griesmer_g, griesmer_sum, k_bracket,
                     lcd_upper_bound, meets_griesmer, sphere_packing_max_n)
from .codes import (BudgetExceededError, LinearCode, RankDeficiencyError,
                    ZeroDimensionalCodeError, dual, dual_distance,
                    dual_distance_at_least_2, from_generator, is_lcd,
                    load_code, min_weight, min_weight_at_most, save_code,
                    shorten)
from .gf import (DimensionMismatchError, FieldMismatchError, FqMatrix,
                 format_matrix, gram, is_nonsingular, nullspace_basis,
                 parse_matrix, rank, rref)
from .highrate import highrate_column_search, projective_points
from .method1 import run_method1
from .refdata import (build_paper_code, build_parity_family,
                      list_paper_code_ids, paper_code_params)
from .search import (Certificate, ReductionPlan, SearchSpec,
                     apply_main_reduction, enumerate_lcd_multiset,
                     make_search_spec, reduction_r, reduction_s_prime,
                     search_multiset)
from .simplex import (MultiplicityVector, build_multiset_code, extend_lcd,
                      format_multiplicities, multiplicities_of,
                      multiplicity_bounds, parse_multiplicities,
                      simplex_matrix, weight_profile)
from .verify import TableEntry, TableReport, verify_table

__version__ = "0.1.0"

__all__ = [
    "BoundVerdict", "BudgetExceededError", "Certificate",
    "DimensionMismatchError", "FieldMismatchError", "FqMatrix", "LinearCode",
    "MultiplicityVector", "RankDeficiencyError", "ReductionPlan", "SearchSpec",
    "TableEntry", "TableReport", "ZeroDimensionalCodeError",
    "apply_main_reduction", "build_multiset_code", "build_paper_code",
    "build_parity_family", "dual", "dual_distance", "dual_distance_at_least_2",
    "enumerate_lcd_multiset", "extend_lcd", "format_matrix",
    "format_multiplicities", "from_generator", "gram", "griesmer_g",
    "griesmer_sum", "highrate_column_search", "is_lcd", "is_nonsingular",
    "k_bracket", "lcd_upper_bound", "list_paper_code_ids", "load_code",
    "make_search_spec", "meets_griesmer", "min_weight", "min_weight_at_most",
    "multiplicities_of", "multiplicity_bounds", "nullspace_basis",
    "paper_code_params", "parse_matrix", "parse_multiplicities",
    "projective_points", "rank", "reduction_r", "reduction_s_prime", "rref",
    "run_method1", "save_code", "search_multiset", "shorten",
    "simplex_matrix", "sphere_packing_max_n", "verify_table",
    "weight_profile",
]
