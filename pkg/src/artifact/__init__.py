"""Exact generating functions for even/odd 132-avoiding permutations under
pattern constraints, with a brute-force enumeration oracle to verify them."""

__version__ = "0.1.0"

from .exact_algebra import (BiSeries, Poly, RatFunc, Series, catalan_series,
                            even_odd_part, ratfunc_arith, series_expand,
                            solve_linear_2x2, substitute)
from .patterns import (CanonicalDecomposition, ContainSpec, OracleQuery,
                       canonical_decomposition, generate_132_avoiders,
                       normalize, occurrences, oracle_count, sign, statistic)
from .chebyshev import R, R_sq, chebyshev_U, cleared_U, cleared_W, u_recip
from .genfun import (ContainOnceGF, GFTriple, Gk_xy, Gk_y1,
                     TwoRestrictionPair, F_tau, M_tau, closed_increasing,
                     closed_kd, closed_mmc, closed_unrestricted, closed_213k,
                     contain_once_increasing, contain_r_increasing, gftriple,
                     head_swapped_pattern, increasing_pattern, kd_pattern,
                     odd_wedge, rlm_distribution, two_restrictions,
                     verify_containment_equations)
from .verify import FAMILIES, run_all, run_family, summarize

__all__ = [
    "BiSeries", "Poly", "RatFunc", "Series",
    "catalan_series", "even_odd_part", "ratfunc_arith", "series_expand",
    "solve_linear_2x2", "substitute",
    "CanonicalDecomposition", "ContainSpec", "OracleQuery",
    "canonical_decomposition", "generate_132_avoiders", "normalize",
    "occurrences", "oracle_count", "sign", "statistic",
    "R", "R_sq", "chebyshev_U", "cleared_U", "cleared_W", "u_recip",
    "ContainOnceGF", "GFTriple", "Gk_xy", "Gk_y1", "TwoRestrictionPair",
    "F_tau", "M_tau", "closed_increasing", "closed_kd", "closed_mmc",
    "closed_unrestricted", "closed_213k", "contain_once_increasing",
    "contain_r_increasing", "gftriple", "head_swapped_pattern",
    "increasing_pattern", "kd_pattern", "odd_wedge", "rlm_distribution",
    "two_restrictions", "verify_containment_equations",
    "FAMILIES", "run_all", "run_family", "summarize",
    "__version__",
]
