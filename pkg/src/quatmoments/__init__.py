"""Exact and Monte Carlo moments of real and quaternionic Gaussian
random-matrix ensembles, computed through twisted ribbon graph
enumeration, symbolic pair reduction, and sampling, with a
machine-checked N -> -2N duality between the real and quaternionic
families."""

from .engine import (DualityReport, dual_transform, duality_check,
                     goe_moment_poly, gse_moment_poly, wigner_moment_polys,
                     wishart_moment_polys, wishart_quat_poly,
                     wishart_real_poly, word_moment_via_graphs)
from .limits import ResourceLimitError
from .polynomial import MomentPoly
from .quaternion import Quat
from .wick import (Const, MomentExpr, VarRef, bare_word, const,
                   enumerate_wick_pairings, full_moment, isserlis_moment,
                   re_words, real_gaussian, wick_reduce, zvar)

__all__ = [
    "Const", "DualityReport", "MomentExpr", "MomentPoly", "Quat",
    "ResourceLimitError", "VarRef", "bare_word", "const", "dual_transform",
    "duality_check", "enumerate_wick_pairings", "full_moment",
    "goe_moment_poly", "gse_moment_poly", "isserlis_moment", "re_words",
    "real_gaussian", "wick_reduce", "wigner_moment_polys",
    "wishart_moment_polys", "wishart_quat_poly", "wishart_real_poly",
    "word_moment_via_graphs", "zvar",
]

__version__ = "0.1.0"
