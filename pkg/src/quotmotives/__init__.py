"""Exact generating series of motivic classes for Quot schemes and
Nakajima quiver varieties, verified against brute-force point counts
over small finite fields.

All arithmetic is exact: classes are integer Laurent polynomials in the
Lefschetz class L, series are truncated at an explicit order, and quiver
partition sums run over reduced fractions of integer polynomials.
"""

from .rings import (ExactnessError, LaurentPoly, RationalFn, affine_class,
                    dual, eval_int, projective_class)
from .series import TruncatedSeries, geometric_series, series_exp, series_log
from .plethystic import (exp_pleth, exp_pleth_product, log_pleth,
                         power_structure, symmetric_power, verify_power_axioms)
from .quiver import (Quiver, euler_form, nakajima_dim, nakajima_motive_series,
                     nakajima_partition_sum, nilpotent_motive_series,
                     partition_collections, partitions_of, q_pochhammer,
                     t_pochhammer, verify_heine)
from .quot import (UnsupportedDimensionError, compare_affine_plane_vs_framed,
                   jordan_product_series, nakajima_framed_series,
                   punctual_quot_series, quot_affine_plane_series, quot_series,
                   verify_class1_closed, verify_duality, verify_product_vs_exp)
from .specialize import (point_count_series, poincare_poly, zeta_series,
                         verify_zeta_product_curve, verify_zeta_product_surface)
from .oracle import (BudgetError, active_backend, count_global_affine,
                     count_punctual, gl_order, is_stable, raw_stable_count)
from .report import CheckReport

__version__ = "0.1.0"

__all__ = [
    "BudgetError", "CheckReport", "ExactnessError", "LaurentPoly", "Quiver",
    "RationalFn", "TruncatedSeries", "UnsupportedDimensionError",
    "active_backend", "affine_class", "compare_affine_plane_vs_framed",
    "count_global_affine", "count_punctual", "dual", "euler_form", "eval_int",
    "exp_pleth", "exp_pleth_product", "geometric_series", "gl_order",
    "is_stable", "jordan_product_series", "log_pleth", "nakajima_dim",
    "nakajima_framed_series", "nakajima_motive_series",
    "nakajima_partition_sum", "nilpotent_motive_series",
    "partition_collections", "partitions_of", "poincare_poly",
    "point_count_series", "power_structure", "projective_class",
    "punctual_quot_series", "q_pochhammer", "quot_affine_plane_series",
    "quot_series", "raw_stable_count", "series_exp", "series_log",
    "symmetric_power", "t_pochhammer", "verify_class1_closed",
    "verify_duality", "verify_heine", "verify_power_axioms",
    "verify_product_vs_exp", "verify_zeta_product_curve",
    "verify_zeta_product_surface", "zeta_series",
]
