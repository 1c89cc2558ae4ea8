"""Lie superalgebras given by structure constants, and their elements.

A :class:`LieSuperalgebra` stores c_ij^k for every ordered pair of basis
indices with a nonzero bracket. Builders usually pass only one of each pair
(``[x, y]``) and let :meth:`LieSuperalgebra.from_brackets` fill in
``[y, x] = −(−1)^{|x||y|}[x, y]``.

Elements are coefficient maps over any ring. The bracket of two elements is

    [X, Y] = Σ_{i,j,k} y_j · x_i · c_ij^k e_k

with the coefficient product written in that order, which is the sign rule
for A-points when the coefficients are Grassmann numbers (and harmless for
commutative rings).
"""

import logging
from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from typing import Any, Literal

from supercocycle_kit.algebra.linalg import sparse_matrix, to_rows
from supercocycle_kit.exceptions import (
    AlgebraValidationError,
    ParentMismatchError,
    UsageError,
)
from supercocycle_kit.models.algebra import ValidationFailure, ValidationReport
from supercocycle_kit.models.enums import Parity
from supercocycle_kit.protocols import as_scalar, is_zero
from supercocycle_kit.utils.sampling import RationalSampler

from .basis import SuperBasis

logger = logging.getLogger(__name__)

StructureTable = dict[tuple[int, int], dict[int, Fraction]]
Axiom = Literal["antisymmetry", "parity", "jacobi"]


def antisymmetry_sign(pi: Parity, pj: Parity) -> int:
    """−(−1)^{|i||j|}: the factor relating c_ji to c_ij."""
    return 1 if (pi and pj) else -1


class LieSuperalgebra:
    """Finite-dimensional Lie superalgebra with exact rational structure constants.

    Attributes:
        name: Display name
        basis: Parity-labelled basis
        invariant_form: Optional symmetric invariant bilinear form on the basis
            (set for so(n), where it is the trace form)
    """

    def __init__(
        self,
        name: str,
        basis: SuperBasis,
        table: Mapping[tuple[int, int], Mapping[int, Fraction]],
        invariant_form: Mapping[tuple[int, int], Fraction] | None = None,
    ) -> None:
        self.name = name
        self.basis = basis
        self._table: StructureTable = {}
        for pair, result in table.items():
            cleaned = {k: Fraction(v) for k, v in result.items() if v != 0}
            if cleaned:
                self._table[pair] = cleaned
        self.invariant_form = dict(invariant_form) if invariant_form else None
        self._sources: dict[int, list[tuple[int, int, Fraction]]] = {}
        for (i, j), result in self._table.items():
            for k, c in result.items():
                self._sources.setdefault(k, []).append((i, j, c))

    @classmethod
    def from_brackets(
        cls,
        name: str,
        basis: SuperBasis,
        brackets: Mapping[tuple[str, str], Mapping[str, Fraction | int]],
        invariant_form: Mapping[tuple[int, int], Fraction] | None = None,
    ) -> "LieSuperalgebra":
        """Build from labelled brackets, completing them by graded antisymmetry.

        A pair given in both orders is kept as written, so inconsistent input
        is reported by :func:`validate` rather than silently repaired.

        Raises:
            UsageError: If a bracket mentions an unknown label
        """
        table: StructureTable = {}
        for (x, y), result in brackets.items():
            try:
                i, j = basis.index(x), basis.index(y)
                entries = {basis.index(lbl): Fraction(c) for lbl, c in result.items()}
            except KeyError as e:
                raise UsageError(f"bracket [{x}, {y}] uses unknown label {e}") from e
            table[(i, j)] = entries
        for (i, j), entries in list(table.items()):
            if (j, i) in table or i == j:
                continue
            sign = antisymmetry_sign(basis.parities[i], basis.parities[j])
            table[(j, i)] = {k: sign * c for k, c in entries.items()}
        return cls(name, basis, table, invariant_form)

    # Structure

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def labels(self) -> tuple[str, ...]:
        return self.basis.labels

    def parity(self, item: int | str) -> Parity:
        return self.basis.parity(item)

    def index(self, label: str) -> int:
        return self.basis.index(label)

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        """[e_i, e_j] as ``{k: c_ij^k}`` (empty when zero)."""
        return self._table.get((i, j), {})

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        return self._table.get((i, j), {}).get(k, Fraction(0))

    def nonzero_brackets(self) -> Iterator[tuple[tuple[int, int], dict[int, Fraction]]]:
        """Every ordered pair with a nonzero bracket."""
        yield from self._table.items()

    def sources(self, k: int) -> list[tuple[int, int, Fraction]]:
        """Ordered pairs (i, j) with c_ij^k ≠ 0, together with c_ij^k."""
        return self._sources.get(k, [])

    def is_abelian(self) -> bool:
        return not self._table

    # Elements

    def element(self, coefficients: Mapping[str, Any] | None = None) -> "GradedElement":
        """Element from a ``{label: coefficient}`` map."""
        coefficients = coefficients or {}
        return GradedElement(self, {self.index(lbl): c for lbl, c in coefficients.items()})

    def basis_element(self, item: int | str) -> "GradedElement":
        idx = self.index(item) if isinstance(item, str) else item
        return GradedElement(self, {idx: Fraction(1)})

    def zero(self) -> "GradedElement":
        return GradedElement(self, {})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieSuperalgebra):
            return NotImplemented
        return self.basis == other.basis and self._table == other._table

    __hash__ = object.__hash__

    def __repr__(self) -> str:
        even, odd = self.basis.dimensions
        return f"LieSuperalgebra({self.name!r}, {even}|{odd})"


class GradedElement:
    """Element Σ x_i e_i of a Lie superalgebra, coefficients in any ring."""

    __slots__ = ("parent", "coeffs")

    def __init__(self, parent: LieSuperalgebra, coeffs: Mapping[int, Any]) -> None:
        self.parent = parent
        self.coeffs: dict[int, Any] = {
            i: as_scalar(c) for i, c in coeffs.items() if not is_zero(c)
        }

    def _check(self, other: "GradedElement") -> None:
        if other.parent is not self.parent:
            raise ParentMismatchError(
                f"elements of {self.parent.name} and {other.parent.name} cannot be combined"
            )

    def coefficient(self, item: int | str) -> Any:
        idx = self.parent.index(item) if isinstance(item, str) else item
        return self.coeffs.get(idx, Fraction(0))

    def support(self) -> list[str]:
        return [self.parent.labels[i] for i in sorted(self.coeffs)]

    def items(self) -> Iterator[tuple[int, Any]]:
        return iter(sorted(self.coeffs.items()))

    def __add__(self, other: "GradedElement") -> "GradedElement":
        self._check(other)
        result = dict(self.coeffs)
        for i, c in other.coeffs.items():
            result[i] = result[i] + c if i in result else c
        return GradedElement(self.parent, result)

    def __sub__(self, other: "GradedElement") -> "GradedElement":
        return self + (-other)

    def __neg__(self) -> "GradedElement":
        return GradedElement(self.parent, {i: -c for i, c in self.coeffs.items()})

    def __mul__(self, scalar: Any) -> "GradedElement":
        return GradedElement(self.parent, {i: c * scalar for i, c in self.coeffs.items()})

    def __rmul__(self, scalar: Any) -> "GradedElement":
        return GradedElement(self.parent, {i: scalar * c for i, c in self.coeffs.items()})

    def map_coefficients(self, fn: Any) -> "GradedElement":
        return GradedElement(self.parent, {i: fn(c) for i, c in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GradedElement):
            if other.parent is not self.parent:
                return False
            keys = set(self.coeffs) | set(other.coeffs)
            return all(
                is_zero(self.coeffs.get(i, Fraction(0)) - other.coeffs.get(i, Fraction(0)))
                for i in keys
            )
        if is_zero(other):
            return self.is_zero()
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        terms = ", ".join(f"{self.parent.labels[i]}: {c}" for i, c in self.items())
        return f"GradedElement({{{terms}}})"


def bracket(x: GradedElement, y: GradedElement) -> GradedElement:
    """[X, Y] = Σ y_j·x_i·c_ij^k e_k.

    Raises:
        ParentMismatchError: If X and Y live in different algebras
    """
    x._check(y)
    g = x.parent
    result: dict[int, Any] = {}
    for i, xi in x.coeffs.items():
        for j, yj in y.coeffs.items():
            entries = g.bracket_basis(i, j)
            if not entries:
                continue
            product = yj * xi
            for k, c in entries.items():
                term = product * c
                result[k] = result[k] + term if k in result else term
    return GradedElement(g, result)


# Validation


def _jacobiator(g: LieSuperalgebra, i: int, j: int, k: int) -> GradedElement:
    pi, pj, pk = g.parity(i), g.parity(j), g.parity(k)
    ei, ej, ek = g.basis_element(i), g.basis_element(j), g.basis_element(k)
    first = bracket(ei, bracket(ej, ek)) * (-1 if pi and pk else 1)
    second = bracket(ej, bracket(ek, ei)) * (-1 if pj and pi else 1)
    third = bracket(ek, bracket(ei, ej)) * (-1 if pk and pj else 1)
    return first + second + third


Triple = tuple[int, int, int]


def _triples(g: LieSuperalgebra, budget: int, seed: int) -> tuple[Iterable[Triple], bool]:
    n = g.dimension
    total = n * (n + 1) * (n + 2) // 6
    if total <= budget:
        return (
            ((i, j, k) for i in range(n) for j in range(i, n) for k in range(j, n)),
            False,
        )
    logger.warning(
        f"Sampling {budget} of {total} Jacobi triples for {g.name} (seed {seed})"
    )
    sampler = RationalSampler(seed)
    picks: set[Triple] = set()
    # every parity pattern is represented
    even = [i for i in range(n) if not g.parity(i)]
    odd = [i for i in range(n) if g.parity(i)]
    for pattern in ((0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 1, 1)):
        pools = [odd if p else even for p in pattern]
        if all(pools):
            for _ in range(max(1, budget // 8)):
                a, b, c = sorted(sampler.choice(pool) for pool in pools)
                picks.add((a, b, c))
    while len(picks) < budget:
        a, b, c = sorted(sampler.integer(0, n - 1) for _ in range(3))
        picks.add((a, b, c))
    return sorted(picks), True


def validate(
    g: LieSuperalgebra,
    *,
    exhaustive_limit: int = 20_000,
    seed: int = 0,
    raise_on_error: bool = False,
) -> ValidationReport:
    """Check graded antisymmetry, parity consistency and the graded Jacobi identity.

    Jacobi is checked on every basis triple when there are at most
    ``exhaustive_limit`` of them (up to permutation), otherwise on a seeded
    sample of that size covering every parity pattern.

    Args:
        g: Algebra to check
        exhaustive_limit: Triple budget for the exhaustive scan
        seed: Seed used when sampling triples
        raise_on_error: Raise on the first failure instead of reporting

    Returns:
        ValidationReport listing every violation found

    Raises:
        AlgebraValidationError: If ``raise_on_error`` and an axiom fails
    """
    report = ValidationReport(algebra=g.name)
    labels = g.labels

    def fail(axiom: Axiom, idx: tuple[int, ...], detail: str) -> None:
        names = tuple(labels[i] for i in idx)
        if raise_on_error:
            raise AlgebraValidationError(f"{axiom} fails for {names}: {detail}", failing=names)
        report.failures.append(
            ValidationFailure(axiom=axiom, labels=list(names), detail=detail)
        )

    for (i, j), entries in g.nonzero_brackets():
        sign = antisymmetry_sign(g.parity(i), g.parity(j))
        mirror = g.bracket_basis(j, i)
        for k in set(entries) | set(mirror):
            if mirror.get(k, Fraction(0)) != sign * entries.get(k, Fraction(0)):
                fail("antisymmetry", (i, j), f"c^{labels[k]} mismatch")
        for k in entries:
            if (g.parity(i) + g.parity(j)) % 2 != g.parity(k):
                fail("parity", (i, j, k), "bracket changes total parity")

    triples, sampled = _triples(g, exhaustive_limit, seed)
    count = 0
    for i, j, k in triples:
        count += 1
        jac = _jacobiator(g, i, j, k)
        if not jac.is_zero():
            fail("jacobi", (i, j, k), repr(jac))
    report.triples_checked = count
    report.sampled = sampled
    logger.debug(f"Validated {g.name}: {count} triples, {len(report.failures)} failures")
    return report


# Structural predicates


def is_two_step_nilpotent(g: LieSuperalgebra) -> bool:
    """True when [g, [g, g]] = 0; abelian algebras qualify."""
    images = [g.bracket_basis(i, j) for (i, j), _ in g.nonzero_brackets()]
    for entries in images:
        image = GradedElement(g, entries)
        for m in range(g.dimension):
            if not bracket(g.basis_element(m), image).is_zero():
                return False
    return True


def derived_algebra(g: LieSuperalgebra) -> list[GradedElement]:
    """A basis (in reduced row echelon form) of [g, g]."""
    rows = {r: dict(entries) for r, (_, entries) in enumerate(g.nonzero_brackets())}
    if not rows:
        return []
    reduced, pivots = sparse_matrix(rows, (len(rows), g.dimension)).rref()
    reduced_rows = to_rows(reduced)
    return [GradedElement(g, reduced_rows.get(r, {})) for r in range(len(pivots))]


def is_ideal(g: LieSuperalgebra, labels: Iterable[str]) -> bool:
    """True when span(labels) is an ideal of g."""
    inside = {g.index(lbl) for lbl in labels}
    for (i, j), entries in g.nonzero_brackets():
        if j in inside and not set(entries) <= inside:
            return False
    return True


def restriction(
    g: LieSuperalgebra, labels: Iterable[str], name: str | None = None
) -> LieSuperalgebra:
    """Subalgebra spanned by basis labels, in g's order.

    Raises:
        UsageError: If the labels do not span a subalgebra
    """
    keep = set(labels)
    ordered = [lbl for lbl in g.labels if lbl in keep]
    if len(ordered) != len(keep):
        raise UsageError(f"unknown labels {sorted(keep - set(g.labels))}")
    basis = SuperBasis(ordered, [g.parity(lbl) for lbl in ordered])
    position = {g.index(lbl): n for n, lbl in enumerate(ordered)}
    table: StructureTable = {}
    for (i, j), entries in g.nonzero_brackets():
        if i in position and j in position:
            if not set(entries) <= set(position):
                raise UsageError(
                    f"[{g.labels[i]}, {g.labels[j]}] leaves the span of the given labels"
                )
            table[(position[i], position[j])] = {position[k]: c for k, c in entries.items()}
    return LieSuperalgebra(name or f"{g.name}|restricted", basis, table)
