"""Exact weight systems, path-state inner products and boundary-profile
expansions for simple Lie algebras.

All arithmetic is exact: inner products are arbitrary-precision integers and
cocharacter data are rationals (:class:`fractions.Fraction` on the Python
side). Root indices and word letters are 1-based, matching the command-line
tool; words are given in application order (first letter = first lowering
operator applied to the highest weight state).
"""

from ._core import (
    Algebra,
    ChiExpansion,
    DomainError,
    EvaluationOverflowError,
    InternalError,
    ResourceError,
    WeightSystem,
    apply_raising,
    boundary_residual,
    chi_expansion,
    evaluate_chi,
    gram_matrix,
    inner_product,
    inner_product_oracle,
    parse_staircase,
    scan_coefficient_positivity,
    staircase_norm,
    state_coefficients,
    verify_minuscule_gram,
    weight_norm,
    weight_of_word,
)

__all__ = [
    "Algebra",
    "ChiExpansion",
    "DomainError",
    "EvaluationOverflowError",
    "InternalError",
    "ResourceError",
    "WeightSystem",
    "apply_raising",
    "boundary_residual",
    "chi_expansion",
    "evaluate_chi",
    "gram_matrix",
    "inner_product",
    "inner_product_oracle",
    "parse_staircase",
    "scan_coefficient_positivity",
    "staircase_norm",
    "state_coefficients",
    "verify_minuscule_gram",
    "weight_norm",
    "weight_of_word",
]

__version__ = "0.1.0"
