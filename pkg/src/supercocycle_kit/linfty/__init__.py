"""Slim Lie n-superalgebras and the generalized Jacobi identity."""

from .checker import check_linfty, jacobi_terms, slim_terms
from .slim import (
    LInftyData,
    SlimQuadruple,
    build_heisenberg_2algebra,
    build_slim,
    build_string,
    build_superstring,
    build_twobrane,
    extract,
    overall_grade,
)
from .unshuffles import Unshuffle, inner_unshuffles, unshuffles

__all__ = [
    "LInftyData",
    "SlimQuadruple",
    "build_slim",
    "extract",
    "build_heisenberg_2algebra",
    "build_string",
    "build_superstring",
    "build_twobrane",
    "overall_grade",
    "check_linfty",
    "jacobi_terms",
    "slim_terms",
    "Unshuffle",
    "unshuffles",
    "inner_unshuffles",
]
