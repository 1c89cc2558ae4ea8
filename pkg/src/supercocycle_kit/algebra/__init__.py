"""Division algebras, their matrices, and polynomial coefficient rings."""

from .division_algebra import (
    DAElement,
    associator,
    conjugate,
    im,
    inner,
    multiplication_table,
    multiply,
    norm_sq,
    re,
)
from .matrices import DAMatrix, dam_adjoint, dam_multiply, dam_trace, re_trace
from .poly import Monomial, Poly, monomial

__all__ = [
    "DAElement",
    "multiply",
    "conjugate",
    "re",
    "im",
    "norm_sq",
    "inner",
    "associator",
    "multiplication_table",
    "DAMatrix",
    "dam_multiply",
    "dam_adjoint",
    "dam_trace",
    "re_trace",
    "Poly",
    "Monomial",
    "monomial",
]
