"""Exponential cube simplices and the universal integration coefficients.

The based simplex with vertices 1, g₁, g₁g₂, …, g₁⋯g_p is parameterized over
the unit cube by

    φ(t₁, …, t_p) = exp(t₁ Z(X₁, t₂ Z(X₂, … t_p X_p)))

where exp(X_i) = g_i and Z(X, Y) = X + Y + ½[X, Y] is the 2-step BCH
product. For a p-cochain ω the integral of the left-translated pullback is

    ∫ω(g₁, …, g_p) = ∫_{[0,1]^p} ω(φ⁻¹∂₁φ, …, φ⁻¹∂_pφ) dt

with φ⁻¹∂_iφ = ∂_iE − ½[E, ∂_iE] for E = log φ.

The translated partials only involve the words X_i and [X_i, X_j], so they
are computed once in the free 2-step nilpotent Lie algebra on p generators.
Integrating the determinant of their word coefficients gives one rational
number per word tuple; any ω is then integrated by evaluating it on the
corresponding words of the actual algebra.
"""

import logging
from collections.abc import Sequence
from fractions import Fraction
from functools import cache
from itertools import combinations
from typing import Any

from supercocycle_kit.algebra.poly import Poly
from supercocycle_kit.cohomology import Cochain, Monomial, monomials
from supercocycle_kit.exceptions import CochainError, UsageError
from supercocycle_kit.protocols import is_zero
from supercocycle_kit.superalgebra import (
    GradedElement,
    LieSuperalgebra,
    SuperBasis,
    bracket,
)

from .bch import HALF, bch2, require_two_step

logger = logging.getLogger(__name__)


def cube_variables(p: int) -> list[str]:
    """Names of the cube parameters t1 … tp."""
    return [f"t{i}" for i in range(1, p + 1)]


def word_label(i: int, j: int | None = None) -> str:
    """Label of the generator X_i, or of [X_i, X_j] when j is given (1-based)."""
    return f"X{i}" if j is None else f"[X{i},X{j}]"


@cache
def free_two_step(p: int) -> LieSuperalgebra:
    """Free 2-step nilpotent Lie algebra on X1 … Xp.

    The basis is X1 … Xp followed by [Xi,Xj] for i < j in lexicographic order.
    """
    if p < 0:
        raise UsageError(f"number of generators must be >= 0, got {p}")
    pairs = list(combinations(range(1, p + 1), 2))
    labels = [word_label(i) for i in range(1, p + 1)] + [word_label(i, j) for i, j in pairs]
    brackets = {(word_label(i), word_label(j)): {word_label(i, j): 1} for i, j in pairs}
    return LieSuperalgebra.from_brackets(
        f"free2({p})", SuperBasis.from_parts(labels), brackets
    )


def _partial(x: GradedElement, var: str) -> GradedElement:
    return x.map_coefficients(lambda c: c.partial(var) if isinstance(c, Poly) else Fraction(0))


def simplex_exponent(steps: Sequence[GradedElement]) -> GradedElement:
    """E(t) = t₁ Z(X₁, t₂ Z(X₂, … t_p X_p)) for the steps X₁ … X_p.

    Raises:
        UsageError: If no steps are given
        NilpotencyError: If the algebra is not 2-step nilpotent
    """
    if not steps:
        raise UsageError("a simplex exponent needs at least one step")
    t = [Poly.variable(v) for v in cube_variables(len(steps))]
    inner = steps[-1] * t[-1]
    for i in range(len(steps) - 2, -1, -1):
        inner = bch2(steps[i], inner) * t[i]
    return inner


def cube_exponent(vertices: Sequence[GradedElement]) -> GradedElement:
    """log φ(t) for the simplex with vertices exp(Y₀), …, exp(Y_p).

    The steps are X_i = log(g_{i−1}⁻¹ g_i); the corner t = 0 maps to g₀ and
    the corner t₁ = … = t_i = 1, t_{i+1} = … = 0 maps to g_i.

    Args:
        vertices: Logarithms Y₀ … Y_p of the vertices (at least two)
    """
    if len(vertices) < 2:
        raise UsageError("a cube simplex needs at least two vertices")
    require_two_step(vertices[0].parent)
    steps = [bch2(-vertices[i - 1], vertices[i]) for i in range(1, len(vertices))]
    exponent = simplex_exponent(steps)
    if vertices[0].is_zero():
        return exponent
    return bch2(vertices[0], exponent)


def translated_partials(exponent: GradedElement, variables: Sequence[str]) -> list[GradedElement]:
    """φ⁻¹∂_iφ = ∂_iE − ½[E, ∂_iE] for each cube variable."""
    require_two_step(exponent.parent)
    result = []
    for var in variables:
        d = _partial(exponent, var)
        result.append(d - bracket(exponent, d) * HALF)
    return result


@cache
def universal_coefficients(p: int) -> dict[Monomial, Fraction]:
    """Integrated determinant coefficient of each word tuple of the free algebra.

    Keys are canonical monomials of :func:`free_two_step` ``(p)``; tuples whose
    coefficient integrates to zero are left out.

    Example:
        >>> coefficients = universal_coefficients(2)
        >>> coefficients[(0, 1)], coefficients[(0, 2)], coefficients[(1, 2)]
        (Fraction(1, 2), Fraction(1, 12), Fraction(-1, 12))
    """
    free = free_two_step(p)
    if p == 0:
        return {(): Fraction(1)}
    variables = cube_variables(p)
    generators = [free.basis_element(word_label(i)) for i in range(1, p + 1)]
    partials = translated_partials(simplex_exponent(generators), variables)
    coefficients: dict[Monomial, Fraction] = {}
    for mono in monomials(free, p):
        value = Cochain(free, p, {mono: Fraction(1)}).evaluate(*partials)
        if isinstance(value, Poly):
            value = value.integrate_unit_cube(variables).constant_term()
        if value != 0:
            coefficients[mono] = Fraction(value)
    logger.debug(f"Universal coefficients for p={p}: {len(coefficients)} nonzero word tuples")
    return coefficients


def labelled_coefficients(p: int) -> dict[tuple[str, ...], Fraction]:
    """:func:`universal_coefficients` keyed by word labels."""
    labels = free_two_step(p).labels
    return {
        tuple(labels[i] for i in mono): c for mono, c in universal_coefficients(p).items()
    }


def words(args: Sequence[GradedElement]) -> list[GradedElement]:
    """Realize the free-algebra basis on concrete steps: X_i and [X_i, X_j]."""
    realized = list(args)
    for i, j in combinations(range(len(args)), 2):
        realized.append(bracket(args[i], args[j]))
    return realized


def integrate_at(omega: Cochain, args: Sequence[GradedElement]) -> Any:
    """∫ω(exp X₁, …, exp X_p) for concrete steps X_i.

    The steps may carry coefficients in any ring for which ω's A-point
    evaluation is antisymmetric: rationals, commuting polynomials, or
    Grassmann numbers with even A-points.

    Raises:
        CochainError: If the number of steps differs from ω's level
        NilpotencyError: If ω's algebra is not 2-step nilpotent
    """
    if len(args) != omega.level:
        raise CochainError(f"expected {omega.level} group arguments, got {len(args)}")
    require_two_step(omega.parent)
    realized = words(args)
    total: Any = Fraction(0)
    for mono, c in universal_coefficients(omega.level).items():
        value = omega.evaluate(*(realized[i] for i in mono))
        if not is_zero(value):
            total = total + value * c
    return total
