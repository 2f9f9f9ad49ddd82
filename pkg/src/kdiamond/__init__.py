"""Exact and high-precision tools for the broken k-diamond partition function Delta_k(n)."""
from .series import CoeffTable, expand_coeffs, naive_oracle, sigma_weight
from .inequalities import (
    FamilySpec,
    ThresholdReport,
    find_threshold,
    invariants_ABI,
    jensen_poly,
    laguerre_value,
    predicate_eval,
    scan_tables,
    toeplitz_det,
    turan3_value,
)
from .polynomial import IntPolynomial, is_hyperbolic

__all__ = [
    "CoeffTable",
    "expand_coeffs",
    "naive_oracle",
    "sigma_weight",
    "FamilySpec",
    "ThresholdReport",
    "find_threshold",
    "invariants_ABI",
    "jensen_poly",
    "laguerre_value",
    "predicate_eval",
    "scan_tables",
    "toeplitz_det",
    "turan3_value",
    "IntPolynomial",
    "is_hyperbolic",
]
