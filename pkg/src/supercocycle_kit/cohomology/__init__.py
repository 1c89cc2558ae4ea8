"""Chevalley–Eilenberg cochains with trivial coefficients."""

from .coboundary import CoboundaryMatrix, coboundary, coboundary_matrix, coboundary_value, is_closed
from .cochain import (
    Bigrade,
    Cochain,
    Monomial,
    bigrade,
    cochain_from_json,
    cochain_to_document,
    cochain_to_json,
    count_monomials,
    monomials,
    random_cochain,
)
from .cocycles import make_alpha, make_beta, make_gamma, make_j
from .exactness import ExactnessDecision, cohomology_dim, is_exact
from .operations import (
    Extension,
    adjoint_derivation,
    extend_by_zero,
    interior_product,
    invariance_defect,
    restrict_cochain,
    transport,
)
from .signs import chi, koszul_sign, parity_sum, permutation_sign, sort_with_sign

__all__ = [
    "Cochain",
    "Monomial",
    "Bigrade",
    "bigrade",
    "monomials",
    "count_monomials",
    "random_cochain",
    "cochain_to_document",
    "cochain_to_json",
    "cochain_from_json",
    "coboundary",
    "coboundary_value",
    "coboundary_matrix",
    "CoboundaryMatrix",
    "is_closed",
    "make_alpha",
    "make_beta",
    "make_gamma",
    "make_j",
    "is_exact",
    "ExactnessDecision",
    "cohomology_dim",
    "extend_by_zero",
    "Extension",
    "interior_product",
    "invariance_defect",
    "adjoint_derivation",
    "restrict_cochain",
    "transport",
    "koszul_sign",
    "permutation_sign",
    "chi",
    "sort_with_sign",
    "parity_sum",
]
