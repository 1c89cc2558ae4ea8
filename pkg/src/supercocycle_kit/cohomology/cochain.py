"""Graded antisymmetric cochains with trivial coefficients.

A level-p cochain ω stores one coefficient per canonical monomial: a
nondecreasing tuple of basis indices in which even indices do not repeat
(odd ones may, since odd arguments commute). Every other argument tuple is
reached through :func:`~supercocycle_kit.cohomology.signs.sort_with_sign`,
so ω(x_{σ(1)}, …) = χ(σ) ω(x₁, …) holds by construction.

On a supertranslation algebra the monomials split into (p, q)-forms: p
vector arguments and q spinor arguments.
"""

import logging
from collections.abc import Callable, Iterator, Mapping, Sequence
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import comb, factorial
from typing import Any

from sympy.utilities.iterables import multiset_permutations

from supercocycle_kit.exceptions import (
    CochainError,
    ParentMismatchError,
    SerializationError,
    SizeGuardError,
)
from supercocycle_kit.models.cochain import CochainDocument, CochainTerm
from supercocycle_kit.models.enums import Parity
from supercocycle_kit.protocols import as_scalar, is_zero
from supercocycle_kit.superalgebra import GradedElement, LieSuperalgebra
from supercocycle_kit.utils.rationals import format_rational, parse_rational
from supercocycle_kit.utils.sampling import RationalSampler

from .signs import sort_with_sign

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]
Bigrade = tuple[int, int]


def bigrade(g: LieSuperalgebra, monomial: Sequence[int]) -> Bigrade:
    """(number of even arguments, number of odd arguments)."""
    odd = sum(1 for i in monomial if g.parity(i))
    return len(monomial) - odd, odd


def is_canonical(g: LieSuperalgebra, monomial: Sequence[int]) -> bool:
    for a in range(1, len(monomial)):
        if monomial[a] < monomial[a - 1]:
            return False
        if monomial[a] == monomial[a - 1] and not g.parity(monomial[a]):
            return False
    return True


def count_monomials(g: LieSuperalgebra, p: int, grade: Bigrade | None = None) -> int:
    """Dimension of the level-p cochain space (or of one bigrade of it)."""
    n_even, n_odd = g.basis.dimensions
    grades = [grade] if grade is not None else [(a, p - a) for a in range(p + 1)]
    total = 0
    for a, b in grades:
        if a < 0 or b < 0 or a + b != p:
            continue
        total += comb(n_even, a) * comb(n_odd + b - 1, b) if b else comb(n_even, a)
    return total


def monomials(g: LieSuperalgebra, p: int, grade: Bigrade | None = None) -> Iterator[Monomial]:
    """Every canonical monomial of level p, in lexicographic order within each bigrade."""
    even = [i for i in range(g.dimension) if not g.parity(i)]
    odd = [i for i in range(g.dimension) if g.parity(i)]
    grades = [grade] if grade is not None else [(a, p - a) for a in range(p, -1, -1)]
    for a, b in grades:
        if a < 0 or b < 0 or a + b != p:
            continue
        for left in combinations(even, a):
            for right in combinations_with_replacement(odd, b):
                yield left + right


def guard_monomials(requested: int, limit: int, what: str) -> None:
    """Raise SizeGuardError when ``requested`` exceeds ``limit``."""
    if requested > limit:
        raise SizeGuardError(
            f"{what} needs {requested} monomials, over the guard of {limit}",
            limit=limit,
            requested=requested,
        )


class Cochain:
    """An element of Cᵖ(g, R) stored on canonical monomials.

    Coefficients are rationals for everything in this package except the
    induced cochains of the supergeometry layer, which reuse the evaluation
    code with other rings.

    Attributes:
        parent: Algebra the cochain is defined on
        level: Number of arguments p
        coeffs: ``{canonical monomial: coefficient}``, zeros dropped
    """

    __slots__ = ("parent", "level", "coeffs", "_arrangements")

    def __init__(
        self, parent: LieSuperalgebra, level: int, coeffs: Mapping[Monomial, Any] | None = None
    ) -> None:
        if level < 0:
            raise CochainError(f"cochain level must be >= 0, got {level}")
        self.parent = parent
        self.level = level
        self.coeffs: dict[Monomial, Any] = {}
        for mono, c in (coeffs or {}).items():
            if len(mono) != level:
                raise CochainError(
                    f"monomial {mono} does not have {level} arguments",
                    details={"level": level},
                )
            if not is_canonical(parent, mono):
                raise CochainError(f"monomial {mono} is not in canonical order")
            if not is_zero(c):
                self.coeffs[tuple(mono)] = as_scalar(c)
        self._arrangements: dict[Monomial, list[tuple[Monomial, int]]] = {}

    # Construction

    @classmethod
    def zero(cls, parent: LieSuperalgebra, level: int) -> "Cochain":
        return cls(parent, level)

    @classmethod
    def from_values(
        cls, parent: LieSuperalgebra, level: int, values: Mapping[Sequence[int], Any]
    ) -> "Cochain":
        """Build from values on arbitrary index tuples.

        Each tuple is sorted with its Koszul sign; tuples landing on the same
        canonical monomial must agree.

        Raises:
            CochainError: If two tuples prescribe different values
        """
        coeffs: dict[Monomial, Any] = {}
        for indices, value in values.items():
            mono, sign = sort_with_sign(indices, parent.basis.parities)
            if sign == 0:
                if not is_zero(value):
                    raise CochainError(f"nonzero value on repeated even argument {indices}")
                continue
            canonical = as_scalar(value) * sign
            if mono in coeffs and not is_zero(coeffs[mono] - canonical):
                raise CochainError(f"values on {indices} violate graded antisymmetry")
            coeffs[mono] = canonical
        return cls(parent, level, coeffs)

    @classmethod
    def from_labels(
        cls, parent: LieSuperalgebra, values: Mapping[Sequence[str], Any]
    ) -> "Cochain":
        """Build from ``{(label, …): value}``; all tuples must have the same length.

        Example:
            >>> h = build_heisenberg()
            >>> Cochain.from_labels(h, {("q", "p"): 1}).value((0, 1))
            Fraction(-1, 1)
        """
        levels = {len(labels) for labels in values}
        if len(levels) > 1:
            raise CochainError(f"mixed cochain levels {sorted(levels)}")
        level = levels.pop() if levels else 0
        indexed = {tuple(parent.index(lbl) for lbl in labels): v for labels, v in values.items()}
        return cls.from_values(parent, level, indexed)

    @classmethod
    def dual(cls, parent: LieSuperalgebra, *labels: str) -> "Cochain":
        """The dual monomial e*_{l1} ∧ … ∧ e*_{lp}, equal to 1 on (l1, …, lp)."""
        return cls.from_labels(parent, {labels: 1})

    # Evaluation

    def value(self, indices: Sequence[int]) -> Any:
        """ω(e_{i1}, …, e_{ip}) on basis elements."""
        if len(indices) != self.level:
            raise CochainError(f"expected {self.level} arguments, got {len(indices)}")
        mono, sign = sort_with_sign(indices, self.parent.basis.parities)
        if sign == 0 or mono not in self.coeffs:
            return Fraction(0)
        return self.coeffs[mono] * sign

    def value_at(self, *labels: str) -> Any:
        return self.value([self.parent.index(lbl) for lbl in labels])

    def arrangements(self, mono: Monomial) -> list[tuple[Monomial, int]]:
        """Distinct orderings τ of a monomial with ω(e_τ) = sign · ω(e_mono)."""
        if mono not in self._arrangements:
            parities = self.parent.basis.parities
            found = []
            for perm in multiset_permutations(list(mono)):
                _, sign = sort_with_sign(perm, parities)
                found.append((tuple(perm), sign))
            self._arrangements[mono] = found
        return self._arrangements[mono]

    def evaluate(self, *elements: GradedElement) -> Any:
        """ω(X₁, …, X_p) on elements with coefficients in any ring.

        Each basis term contributes X_p[i_p] ⋯ X₁[i₁] · ω(e_{i1}, …, e_{ip}),
        coefficients multiplied in that order. With Grassmann coefficients
        and even A-points this is the A-point evaluation.

        Raises:
            CochainError: If the number of arguments is not the level
            ParentMismatchError: If an argument lives in another algebra
        """
        if len(elements) != self.level:
            raise CochainError(f"expected {self.level} arguments, got {len(elements)}")
        for x in elements:
            if x.parent is not self.parent:
                raise ParentMismatchError(
                    f"cannot evaluate a cochain on {self.parent.name} at {x.parent.name}"
                )
        if self.level == 0:
            return self.coeffs.get((), Fraction(0))
        support = 1
        for x in elements:
            support *= len(x.coeffs)
        if support == 0:
            return Fraction(0)
        if support <= len(self.coeffs) * factorial(self.level):
            return self._evaluate_by_support(elements)
        return self._evaluate_by_monomial(elements)

    def _evaluate_by_support(self, elements: Sequence[GradedElement]) -> Any:
        parities = self.parent.basis.parities
        total: Any = Fraction(0)
        for indices in product(*(sorted(x.coeffs) for x in elements)):
            mono, sign = sort_with_sign(indices, parities)
            c = self.coeffs.get(mono)
            if sign == 0 or c is None:
                continue
            total = total + _ordered_product(elements, indices) * (c * sign)
        return total

    def _evaluate_by_monomial(self, elements: Sequence[GradedElement]) -> Any:
        total: Any = Fraction(0)
        for mono, c in self.coeffs.items():
            for indices, sign in self.arrangements(mono):
                if all(i in x.coeffs for i, x in zip(indices, elements, strict=True)):
                    total = total + _ordered_product(elements, indices) * (c * sign)
        return total

    # Structure

    def bigrades(self) -> set[Bigrade]:
        """Bigrades carrying a nonzero coefficient."""
        return {bigrade(self.parent, mono) for mono in self.coeffs}

    def restrict_to_bigrade(self, grade: Bigrade) -> "Cochain":
        return Cochain(
            self.parent,
            self.level,
            {m: c for m, c in self.coeffs.items() if bigrade(self.parent, m) == grade},
        )

    @property
    def parity(self) -> Parity:
        """Parity of the cochain as a map (zero counts as even).

        Raises:
            CochainError: If the cochain mixes parities
        """
        found = {sum(self.parent.parity(i) for i in mono) % 2 for mono in self.coeffs}
        if len(found) > 1:
            raise CochainError("cochain is not homogeneous")
        return Parity(found.pop()) if found else Parity.EVEN

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self) -> list[tuple[Monomial, Any]]:
        return sorted(self.coeffs.items())

    def labelled(self) -> dict[tuple[str, ...], Any]:
        """Coefficients keyed by label tuples."""
        labels = self.parent.labels
        return {tuple(labels[i] for i in mono): c for mono, c in self.items()}

    # Arithmetic

    def _check(self, other: "Cochain") -> None:
        if other.parent is not self.parent:
            raise ParentMismatchError(
                f"cochains on {self.parent.name} and {other.parent.name} cannot be combined"
            )
        if other.level != self.level:
            raise CochainError(f"cannot combine levels {self.level} and {other.level}")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check(other)
        result = dict(self.coeffs)
        for mono, c in other.coeffs.items():
            result[mono] = result[mono] + c if mono in result else c
        return Cochain(self.parent, self.level, result)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def __neg__(self) -> "Cochain":
        return Cochain(self.parent, self.level, {m: -c for m, c in self.coeffs.items()})

    def __mul__(self, scalar: Any) -> "Cochain":
        return Cochain(self.parent, self.level, {m: c * scalar for m, c in self.coeffs.items()})

    __rmul__ = __mul__

    def map_coefficients(self, fn: Callable[[Any], Any]) -> "Cochain":
        return Cochain(self.parent, self.level, {m: fn(c) for m, c in self.coeffs.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        if other.parent is not self.parent or other.level != self.level:
            return False
        return (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Cochain({self.parent.name}, level={self.level}, terms={len(self.coeffs)})"


def _ordered_product(elements: Sequence[GradedElement], indices: Sequence[int]) -> Any:
    result: Any = None
    for x, i in zip(reversed(elements), reversed(indices), strict=True):
        c = x.coeffs[i]
        result = c if result is None else result * c
    return result


def random_cochain(
    g: LieSuperalgebra,
    p: int,
    sampler: RationalSampler,
    *,
    density: float = 0.5,
    grade: Bigrade | None = None,
    max_monomials: int = 50_000,
) -> Cochain:
    """Cochain with seeded random rational coefficients on a random subset of monomials.

    Raises:
        SizeGuardError: If the cochain space is larger than ``max_monomials``
    """
    guard_monomials(count_monomials(g, p, grade), max_monomials, f"C^{p}({g.name})")
    coeffs = {
        mono: sampler.rational(allow_zero=False)
        for mono in monomials(g, p, grade)
        if sampler.chance(density)
    }
    return Cochain(g, p, coeffs)


# Serialization


def cochain_to_document(omega: Cochain) -> CochainDocument:
    """Describe a rational cochain by label tuples and "num/den" strings."""
    terms = [
        CochainTerm(labels=list(labels), coef=format_rational(c))
        for labels, c in omega.labelled().items()
    ]
    return CochainDocument(algebra=omega.parent.name, level=omega.level, terms=terms)


def cochain_to_json(omega: Cochain) -> dict[str, Any]:
    return cochain_to_document(omega).model_dump()


def cochain_from_json(data: Mapping[str, Any] | CochainDocument, g: LieSuperalgebra) -> Cochain:
    """Read a cochain written by :func:`cochain_to_json`.

    Raises:
        SerializationError: If labels are unknown, the level disagrees with a
            term, or a coefficient is not an exact rational
    """
    try:
        document = (
            data if isinstance(data, CochainDocument) else CochainDocument.model_validate(data)
        )
    except ValueError as e:
        raise SerializationError(f"malformed cochain document: {e}") from e
    if document.algebra != g.name:
        logger.warning(f"Reading a cochain written for {document.algebra} onto {g.name}")
    values: dict[tuple[int, ...], Fraction] = {}
    for term in document.terms:
        if len(term.labels) != document.level:
            raise SerializationError(
                f"term {term.labels} does not have {document.level} labels"
            )
        try:
            indices = tuple(g.index(lbl) for lbl in term.labels)
        except KeyError as e:
            raise SerializationError(f"unknown label {e} in cochain document") from e
        values[indices] = parse_rational(term.coef)
    try:
        return Cochain.from_values(g, document.level, values)
    except CochainError as e:
        raise SerializationError(e.message) from e

