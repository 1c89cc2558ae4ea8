"""Polynomial group cochains in exponential coordinates.

A :class:`GroupCochain` of level p is a polynomial in the coordinates
``x{i}_{label}`` of its arguments g_i = exp(Σ x{i}_label e_label). Group
multiplication is the 2-step BCH product, so every operation here
(coboundary, change to homogeneous form, differentiation at the identity)
is an exact polynomial substitution.

Symbolic cochains need commuting coordinates and are therefore built on
Lie algebras only; A-points of Lie superalgebras go through
:mod:`supercocycle_kit.supergeometry`.
"""

import logging
from collections.abc import Callable, Mapping, Sequence
from fractions import Fraction
from itertools import permutations
from typing import Any

from supercocycle_kit.algebra.poly import Poly, monomial
from supercocycle_kit.cohomology import Cochain, count_monomials, monomials, permutation_sign
from supercocycle_kit.cohomology.cochain import guard_monomials
from supercocycle_kit.exceptions import (
    CochainError,
    ParentMismatchError,
    SerializationError,
    VerificationError,
)
from supercocycle_kit.models.cochain import GroupCochainDocument, GroupTerm
from supercocycle_kit.protocols import is_zero
from supercocycle_kit.superalgebra import GradedElement, LieSuperalgebra
from supercocycle_kit.utils.rationals import format_rational, parse_rational
from supercocycle_kit.utils.sampling import RationalSampler

from .bch import GroupElement, bch2, require_two_step
from .simplices import cube_variables, integrate_at

logger = logging.getLogger(__name__)

GroupArgument = GradedElement | GroupElement


def coordinate(i: int, label: str, prefix: str = "x") -> str:
    """Name of the ``label`` coordinate of argument i."""
    return f"{prefix}{i}_{label}"


def _require_lie(g: LieSuperalgebra) -> None:
    if g.basis.odd_count:
        raise CochainError(
            f"symbolic group cochains need a Lie algebra; {g.name} has odd generators"
        )


def symbolic_point(g: LieSuperalgebra, i: int, prefix: str = "x") -> GradedElement:
    """The element Σ x{i}_label e_label with polynomial coefficients."""
    return g.element({lbl: Poly.variable(coordinate(i, lbl, prefix)) for lbl in g.labels})


def _as_poly(value: Any) -> Poly:
    return value if isinstance(value, Poly) else Poly.constant(value)


def _log(x: GroupArgument) -> GradedElement:
    return x.log if isinstance(x, GroupElement) else x


def _substitution(
    g: LieSuperalgebra, args: Sequence[GroupArgument], prefix: str, start: int
) -> dict[str, Any]:
    values: dict[str, Any] = {}
    for offset, x in enumerate(args):
        log = _log(x)
        if log.parent is not g:
            raise ParentMismatchError(f"argument lives in {log.parent.name}, not {g.name}")
        for lbl in g.labels:
            values[coordinate(start + offset, lbl, prefix)] = log.coefficient(lbl)
    return values


class GroupCochain:
    """Inhomogeneous polynomial p-cochain f(g₁, …, g_p) on exp(g).

    Attributes:
        parent: Lie algebra whose group the cochain lives on
        level: Number of group arguments
        poly: Polynomial in the coordinates x1_*, …, xp_*
    """

    __slots__ = ("parent", "level", "poly")

    def __init__(self, parent: LieSuperalgebra, level: int, poly: Poly) -> None:
        if level < 0:
            raise CochainError(f"cochain level must be >= 0, got {level}")
        self.parent = parent
        self.level = level
        self.poly = poly

    @classmethod
    def zero(cls, parent: LieSuperalgebra, level: int) -> "GroupCochain":
        return cls(parent, level, Poly())

    def evaluate(self, *args: GroupArgument) -> Any:
        """f(exp X₁, …, exp X_p).

        Rational arguments give a Fraction; polynomial arguments give a Poly.

        Raises:
            CochainError: If the number of arguments is not the level
        """
        if len(args) != self.level:
            raise CochainError(f"expected {self.level} group arguments, got {len(args)}")
        return self.poly.substitute(_substitution(self.parent, args, "x", 1))

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def is_normalized(self) -> bool:
        """Whether f vanishes as soon as one argument is the identity."""
        for i in range(1, self.level + 1):
            zeros = {coordinate(i, lbl): Fraction(0) for lbl in self.parent.labels}
            if _as_poly(self.poly.substitute(zeros)) != 0:
                return False
        return True

    def _check(self, other: "GroupCochain") -> None:
        if other.parent is not self.parent or other.level != self.level:
            raise ParentMismatchError(
                f"cannot combine level {self.level} and level {other.level} group cochains"
            )

    def __add__(self, other: "GroupCochain") -> "GroupCochain":
        self._check(other)
        return GroupCochain(self.parent, self.level, self.poly + other.poly)

    def __sub__(self, other: "GroupCochain") -> "GroupCochain":
        self._check(other)
        return GroupCochain(self.parent, self.level, self.poly - other.poly)

    def __neg__(self) -> "GroupCochain":
        return GroupCochain(self.parent, self.level, -self.poly)

    def __mul__(self, scalar: Any) -> "GroupCochain":
        return GroupCochain(self.parent, self.level, self.poly * scalar)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupCochain):
            return NotImplemented
        return (
            other.parent is self.parent and other.level == self.level and self.poly == other.poly
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"GroupCochain({self.parent.name}, level={self.level}, "
            f"terms={len(self.poly.terms)})"
        )


class HomogeneousCochain:
    """Homogeneous form F(g₀, …, g_p) in the coordinates y0_*, …, yp_*."""

    __slots__ = ("parent", "level", "poly")

    def __init__(self, parent: LieSuperalgebra, level: int, poly: Poly) -> None:
        self.parent = parent
        self.level = level
        self.poly = poly

    def evaluate(self, *args: GroupArgument) -> Any:
        if len(args) != self.level + 1:
            raise CochainError(f"expected {self.level + 1} group arguments, got {len(args)}")
        return self.poly.substitute(_substitution(self.parent, args, "y", 0))

    def is_homogeneous(self) -> bool:
        """F(g g₀, …, g g_p) = F(g₀, …, g_p) for a symbolic g."""
        shift = symbolic_point(self.parent, 0, "w")
        points = [symbolic_point(self.parent, j, "y") for j in range(self.level + 1)]
        shifted = _as_poly(self.evaluate(*(bch2(shift, y) for y in points)))
        return shifted == self.poly

    def to_inhomogeneous(self) -> GroupCochain:
        """f(g₁, …, g_p) = F(1, g₁, g₁g₂, …, g₁⋯g_p)."""
        g = self.parent
        vertex = g.zero()
        vertices = [vertex]
        for i in range(1, self.level + 1):
            vertex = bch2(vertex, symbolic_point(g, i))
            vertices.append(vertex)
        return GroupCochain(g, self.level, _as_poly(self.evaluate(*vertices)))


def to_homogeneous(f: GroupCochain) -> HomogeneousCochain:
    """F(g₀, …, g_p) = f(g₀⁻¹g₁, g₁⁻¹g₂, …, g_{p−1}⁻¹g_p)."""
    g = f.parent
    points = [symbolic_point(g, j, "y") for j in range(f.level + 1)]
    steps = [bch2(-points[j - 1], points[j]) for j in range(1, f.level + 1)]
    return HomogeneousCochain(g, f.level, _as_poly(f.evaluate(*steps)))


def integrate_cochain(omega: Cochain, p: int | None = None) -> GroupCochain:
    """∫ω as a polynomial group cochain.

    Args:
        omega: Rational cochain on a 2-step nilpotent Lie algebra
        p: Expected level; defaults to ω's level

    Raises:
        CochainError: On a level mismatch or an algebra with odd generators
        NilpotencyError: If the algebra is not 2-step nilpotent
    """
    if p is not None and p != omega.level:
        raise CochainError(f"level mismatch: cochain has level {omega.level}, asked for {p}")
    g = omega.parent
    _require_lie(g)
    require_two_step(g)
    args = [symbolic_point(g, i) for i in range(1, omega.level + 1)]
    poly = _as_poly(integrate_at(omega, args))
    logger.debug(f"Integrated a level {omega.level} cochain on {g.name}: {len(poly.terms)} terms")
    return GroupCochain(g, omega.level, poly)


def _signed(value: Any, sign: int) -> Any:
    return value if sign > 0 else -value


def group_coboundary_value(
    f: Callable[..., Any],
    args: Sequence[GradedElement],
    multiply: Callable[[GradedElement, GradedElement], GradedElement] = bch2,
) -> Any:
    """(df)(g₁, …, g_{p+1}) for trivial coefficients.

    df = f(g₂, …) + Σ_{i=1}^{p} (−1)^i f(…, g_i g_{i+1}, …) + (−1)^{p+1} f(g₁, …, g_p),
    with ``f`` any callable on group arguments given by their logarithms.
    """
    args = list(args)
    p = len(args) - 1
    total: Any = f(*args[1:])
    for i in range(1, p + 1):
        merged = [*args[: i - 1], multiply(args[i - 1], args[i]), *args[i + 1 :]]
        total = total + _signed(f(*merged), (-1) ** i)
    return total + _signed(f(*args[:-1]), (-1) ** (p + 1))


def group_coboundary(f: GroupCochain) -> GroupCochain:
    """df as a symbolic level p+1 cochain."""
    args = [symbolic_point(f.parent, i) for i in range(1, f.level + 2)]
    return GroupCochain(f.parent, f.level + 1, _as_poly(group_coboundary_value(f.evaluate, args)))


def differentiate_cochain(f: GroupCochain, *, max_monomials: int = 50_000) -> Cochain:
    """van Est differentiation at the identity.

    Df(X₁, …, X_p) = Σ_σ sgn(σ) ∂_{t₁}⋯∂_{t_p} f(exp t₁X_σ(1), …, exp t_pX_σ(p)) at t = 0,

    with no 1/p! factor, so D∘∫ is the identity on cochains.

    Raises:
        CochainError: If the algebra has odd generators
        SizeGuardError: If there are more than ``max_monomials`` basis tuples
    """
    g = f.parent
    _require_lie(g)
    p = f.level
    if p == 0:
        return Cochain(g, 0, {(): f.poly.constant_term()})
    guard_monomials(count_monomials(g, p), max_monomials, f"level {p} van Est differentiation")
    variables = cube_variables(p)
    t = [Poly.variable(v) for v in variables]
    multilinear = monomial(**{v: 1 for v in variables})
    values: dict[tuple[int, ...], Fraction] = {}
    for mono in monomials(g, p):
        total = Fraction(0)
        for order in permutations(range(p)):
            args = [g.basis_element(mono[order[s]]) * t[s] for s in range(p)]
            value = _as_poly(f.evaluate(*args))
            total += permutation_sign(order) * value.coefficient(multilinear)
        if total:
            values[mono] = total
    return Cochain(g, p, values)


# Serialization


def group_cochain_to_json(f: GroupCochain) -> dict[str, Any]:
    """Write a rational group cochain as coordinate powers and "num/den" strings."""
    terms = [
        GroupTerm(powers=dict(mono), coef=format_rational(c))
        for mono, c in sorted(f.poly.terms.items())
    ]
    return GroupCochainDocument(algebra=f.parent.name, level=f.level, terms=terms).model_dump()


def group_cochain_from_json(data: Mapping[str, Any], g: LieSuperalgebra) -> GroupCochain:
    """Read a group cochain written by :func:`group_cochain_to_json`.

    Raises:
        SerializationError: If the document is malformed or uses a coordinate
            that does not belong to an argument of ``g``
    """
    try:
        document = GroupCochainDocument.model_validate(data)
    except ValueError as e:
        raise SerializationError(f"malformed group cochain document: {e}") from e
    if document.algebra != g.name:
        logger.warning(f"Reading a group cochain written for {document.algebra} onto {g.name}")
    known = {
        coordinate(i, lbl) for i in range(1, document.level + 1) for lbl in g.labels
    }
    terms: dict[tuple[tuple[str, int], ...], Fraction] = {}
    for term in document.terms:
        unknown = set(term.powers) - known
        if unknown:
            raise SerializationError(f"unknown coordinates {sorted(unknown)}")
        terms[monomial(**term.powers)] = parse_rational(term.coef)
    return GroupCochain(g, document.level, Poly(terms))


# Sampled checks


def random_group_element(g: LieSuperalgebra, sampler: RationalSampler) -> GradedElement:
    """exp-coordinates with small random rationals in every direction."""
    return g.element({lbl: sampler.rational() for lbl in g.labels})


def describe_point(x: GradedElement) -> dict[str, str]:
    return {x.parent.labels[i]: str(c) for i, c in x.items()}


def verify_group_cocycle(
    f: Callable[..., Any],
    level: int,
    draw: Callable[[], GradedElement],
    samples: int,
    multiply: Callable[[GradedElement, GradedElement], GradedElement] = bch2,
) -> int:
    """Check df = 0 at ``samples`` random (level+1)-tuples from ``draw``.

    Returns:
        Number of tuples checked

    Raises:
        VerificationError: With the failing tuple as counterexample
    """
    for n in range(samples):
        args = [draw() for _ in range(level + 1)]
        defect = group_coboundary_value(f, args, multiply)
        if not is_zero(defect):
            raise VerificationError(
                f"group cocycle identity fails at sample {n}",
                counterexample={
                    "arguments": [describe_point(x) for x in args],
                    "defect": str(defect),
                },
            )
    return samples
