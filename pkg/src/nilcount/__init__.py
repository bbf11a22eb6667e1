"""Exact counts of matrices with fixed Jordan type in ad-nilpotent ideals
of upper-triangular matrices over finite fields, with independent
cross-checking routes and a brute-force oracle."""

from .qpoly import ExactDivisionError, Laurent, RationalFunction, eval_rational
from .formulas import (
    CountReport,
    centralizer_order,
    double_coset_count,
    hess_variety_count,
    hook_count,
    jordan_count,
    jordan_count_chromatic,
    jordan_count_recursive,
    jordan_count_tableaux,
    square_zero_count,
    square_zero_total,
    square_zero_total_closed,
)
from .fforacle import BudgetError, jordan_type, tally_ideal

__all__ = [
    "BudgetError",
    "CountReport",
    "ExactDivisionError",
    "Laurent",
    "RationalFunction",
    "centralizer_order",
    "double_coset_count",
    "eval_rational",
    "hess_variety_count",
    "hook_count",
    "jordan_count",
    "jordan_count_chromatic",
    "jordan_count_recursive",
    "jordan_count_tableaux",
    "jordan_type",
    "square_zero_count",
    "square_zero_total",
    "square_zero_total_closed",
    "tally_ideal",
]

__version__ = "0.1.0"
