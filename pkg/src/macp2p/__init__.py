"""Exact sum-capacity toolkit for the linear deterministic model of a
two-user MAC mutually interfering with a point-to-point link."""

__version__ = "0.1.0"

from .bounds import SumRateBound, floor_div, phi1, phi2, sum_rate_bound
from .channel import (Branch, DerivedParams, Regime, Subcase, SystemParams,
                      classify, derive, transmit)
from .coding import (AlignIndexSet, ConstructionError, PrecoderTriple,
                     RateTriple, ZeroErrorReport, achievable_rates,
                     build_align_set, construct_precoders, verify_zero_error)
from .gdof import GdofPoint, gdof_lower, phi_limit_check, sweep, w_curve
from .gf2 import BitMatrix, hstack, rank, rows_slice, shift_apply, vstack
from .oracle import (JointDistribution, SearchBudget, SearchResult,
                     best_linear_sum_rate, lemma1_gap, max_lemma1_gap_search)

__all__ = [
    "__version__",
    "BitMatrix", "rank", "shift_apply", "hstack", "vstack", "rows_slice",
    "SystemParams", "DerivedParams", "Regime", "Branch", "Subcase",
    "derive", "classify", "transmit",
    "floor_div", "phi1", "phi2", "sum_rate_bound", "SumRateBound",
    "PrecoderTriple", "RateTriple", "AlignIndexSet", "ZeroErrorReport",
    "achievable_rates", "build_align_set", "construct_precoders",
    "verify_zero_error", "ConstructionError",
    "SearchBudget", "SearchResult", "best_linear_sum_rate",
    "JointDistribution", "lemma1_gap", "max_lemma1_gap_search",
    "GdofPoint", "gdof_lower", "w_curve", "phi_limit_check", "sweep",
]
