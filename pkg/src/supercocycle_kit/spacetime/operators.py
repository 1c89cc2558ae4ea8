"""Real linear operators on vector and spinor coordinates.

Composing Clifford actions is not the same as multiplying K-matrices when K
is nonassociative, so every composite map is stored as an exact rational
matrix on real coordinates and composed as an operator.

The Lorentz algebra acts on vectors by ρ(u∧v)A = g(v, A)u − g(u, A)v and on
spinors by σ(u∧v) = c·[Γ(u), Γ(v)], where c is solved once per algebra from
Γ(ρ(X)A) = [σ(X), Γ(A)] and cached.
"""

import logging
from collections.abc import Callable, Sequence
from fractions import Fraction
from functools import cache
from typing import Any

from sympy.polys.matrices import DomainMatrix

from supercocycle_kit.algebra.linalg import apply, sparse_matrix, to_qq, to_rows
from supercocycle_kit.exceptions import ShapeError, VerificationError
from supercocycle_kit.models.enums import AlgebraTag, Chirality, Flavor

from .spinors import SpinorK2, SpinorK3, clifford_act
from .vectors import VectorK2, VectorK3, minkowski_g, minkowski_h

logger = logging.getLogger(__name__)

Vector = VectorK2 | VectorK3


class LinearOperator:
    """Exact rational square matrix acting on real coordinates."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: DomainMatrix) -> None:
        rows, cols = matrix.shape
        if rows != cols:
            raise ShapeError(f"operators must be square, got {matrix.shape}")
        self.matrix = matrix

    @classmethod
    def from_images(
        cls, dimension: int, image: Callable[[int], Sequence[Fraction]]
    ) -> "LinearOperator":
        """Build from the images of the coordinate basis vectors."""
        rows: dict[int, dict[int, Fraction]] = {}
        for j in range(dimension):
            for i, value in enumerate(image(j)):
                if value != 0:
                    rows.setdefault(i, {})[j] = value
        return cls(sparse_matrix(rows, (dimension, dimension)))

    @classmethod
    def zero(cls, dimension: int) -> "LinearOperator":
        return cls(sparse_matrix({}, (dimension, dimension)))

    @property
    def dimension(self) -> int:
        return int(self.matrix.shape[0])

    def _wrap(self, matrix: DomainMatrix) -> "LinearOperator":
        return LinearOperator(matrix)

    def __call__(self, coords: Sequence[Fraction]) -> list[Fraction]:
        return apply(self.matrix, coords)

    def __matmul__(self, other: "LinearOperator") -> "LinearOperator":
        return self._wrap(self.matrix * other.matrix)

    def __add__(self, other: "LinearOperator") -> "LinearOperator":
        return self._wrap(self.matrix + other.matrix)

    def __sub__(self, other: "LinearOperator") -> "LinearOperator":
        return self._wrap(self.matrix - other.matrix)

    def scale(self, value: Fraction) -> "LinearOperator":
        return self._wrap(self.matrix * to_qq(value))

    def commutator(self, other: "LinearOperator") -> "LinearOperator":
        """[self, other] = self∘other − other∘self."""
        return self @ other - other @ self

    def entries(self) -> dict[int, dict[int, Fraction]]:
        """Nonzero entries as ``{row: {col: value}}``."""
        return to_rows(self.matrix)

    def is_zero(self) -> bool:
        return not self.entries()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearOperator):
            return NotImplemented
        return self.dimension == other.dimension and self.entries() == other.entries()

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dimension={self.dimension})"


class SpinorOperator(LinearOperator):
    """Operator on the real coordinates of a spinor space.

    ``chirality`` names the half-spinor space in k+2 dimensions; it is None
    for the full Clifford module (S₊ ⊕ S₋ in k+2, 𝒮 in k+3).
    """

    __slots__ = ("chirality",)

    def __init__(self, matrix: DomainMatrix, chirality: Chirality | None = None) -> None:
        super().__init__(matrix)
        self.chirality = chirality

    def _wrap(self, matrix: DomainMatrix) -> "SpinorOperator":
        return SpinorOperator(matrix, self.chirality)

    def block(self, chirality: Chirality) -> "SpinorOperator":
        """Restrict an even operator on S₊ ⊕ S₋ to one half-spinor space."""
        half = self.dimension // 2
        offset = 0 if chirality is Chirality.PLUS else half
        rows = self.entries()
        restricted = {
            i - offset: {j - offset: v for j, v in row.items() if offset <= j < offset + half}
            for i, row in rows.items()
            if offset <= i < offset + half
        }
        return SpinorOperator(sparse_matrix(restricted, (half, half)), chirality)


# Vectors


def flavor_of(vector: Vector) -> Flavor:
    return Flavor.K3 if isinstance(vector, VectorK3) else Flavor.K2


def metric(a: Vector, b: Vector) -> Any:
    """g on k+2 vectors, h on k+3 vectors."""
    if isinstance(a, VectorK3) and isinstance(b, VectorK3):
        return minkowski_h(a, b)
    if isinstance(a, VectorK2) and isinstance(b, VectorK2):
        return minkowski_g(a, b)
    raise ShapeError("cannot pair vectors of different dimensions")


def vector_basis(tag: AlgebraTag, flavor: Flavor) -> list[Vector]:
    """Coordinate basis, orthogonal for g (resp. h)."""
    n = flavor.spacetime_dimension(tag.dimension)
    if flavor is Flavor.K3:
        return [VectorK3.basis(tag, i) for i in range(n)]
    return [VectorK2.basis(tag, i) for i in range(n)]


def vector_from_coords(tag: AlgebraTag, flavor: Flavor, coords: Sequence[Any]) -> Vector:
    if flavor is Flavor.K3:
        return VectorK3.from_coords(tag, coords)
    return VectorK2.from_coords(tag, coords)


def rho(u: Vector, v: Vector, vector: Vector) -> Vector:
    """ρ(u∧v)A = g(v, A)u − g(u, A)v."""
    return u * metric(v, vector) - v * metric(u, vector)


def vector_operator(u: Vector, v: Vector) -> LinearOperator:
    """ρ(u∧v) as a matrix on vector coordinates."""
    basis = vector_basis(u.tag, flavor_of(u))
    return LinearOperator.from_images(len(basis), lambda j: rho(u, v, basis[j]).to_coords())


# Spinors


def module_dimension(tag: AlgebraTag) -> int:
    """Real dimension of S₊ ⊕ S₋, which is also the dimension of 𝒮."""
    return 4 * tag.dimension


def _module_image(vector: Vector, coords: Sequence[Fraction]) -> list[Any]:
    tag = vector.tag
    if isinstance(vector, VectorK3):
        return clifford_act(vector, SpinorK3.from_coords(tag, coords)).to_coords()
    half = 2 * tag.dimension
    plus = SpinorK2.from_coords(tag, Chirality.PLUS, coords[:half])
    minus = SpinorK2.from_coords(tag, Chirality.MINUS, coords[half:])
    # Γ(A)(ψ, φ) = (Ãφ, Aψ)
    return [*clifford_act(vector, minus).to_coords(), *clifford_act(vector, plus).to_coords()]


def gamma_operator(vector: Vector) -> SpinorOperator:
    """Clifford action Γ(A) on the full spinor module, squaring to g(A, A)."""
    n = module_dimension(vector.tag)

    def image(j: int) -> list[Any]:
        unit = [Fraction(int(i == j)) for i in range(n)]
        return _module_image(vector, unit)

    op = LinearOperator.from_images(n, image)
    return SpinorOperator(op.matrix)


@cache
def spin_normalization(tag: AlgebraTag, flavor: Flavor) -> Fraction:
    """The constant c in σ(u∧v) = c·[Γ(u), Γ(v)].

    Solved from Γ(ρ(X)A) = c·[[Γ(u), Γ(v)], Γ(A)] at the first basis triple
    where the right-hand commutator is nonzero.

    Raises:
        VerificationError: If no basis triple determines c
    """
    basis = vector_basis(tag, flavor)
    gammas = [gamma_operator(b) for b in basis]
    for i, u in enumerate(basis):
        for j in range(i + 1, len(basis)):
            raw = gammas[i].commutator(gammas[j])
            for a, vector in enumerate(basis):
                lhs = gamma_operator(rho(u, basis[j], vector)).entries()
                rhs = raw.commutator(gammas[a]).entries()
                for row, cols in rhs.items():
                    for col, value in cols.items():
                        target = lhs.get(row, {}).get(col, Fraction(0))
                        c = target / value
                        logger.debug(f"Spin normalization for {tag.value} {flavor.value}: {c}")
                        return c
    raise VerificationError(
        "could not determine the spin normalization",
        details={"tag": tag.value, "flavor": flavor.value},
    )


class LorentzGenerator:
    """Action of u∧v on vectors and spinors.

    Attributes:
        vector: ρ(u∧v) on vector coordinates
        module: σ(u∧v) on the full spinor module
        plus: σ restricted to S₊ (k+2 only)
        minus: σ restricted to S₋ (k+2 only)
    """

    def __init__(
        self,
        vector: LinearOperator,
        module: SpinorOperator,
        plus: SpinorOperator | None = None,
        minus: SpinorOperator | None = None,
    ) -> None:
        self.vector = vector
        self.module = module
        self.plus = plus
        self.minus = minus

    def spinor(self, chirality: Chirality | None = None) -> SpinorOperator:
        """σ on S₊, S₋, or (for None) the full module."""
        if chirality is None:
            return self.module
        op = self.plus if chirality is Chirality.PLUS else self.minus
        if op is None:
            raise ShapeError("k+3 spinors have no chiral halves")
        return op


def lorentz_generator(u: Vector, v: Vector) -> LorentzGenerator:
    """Vector and spinor actions of the bivector u∧v.

    u = v (or any parallel pair) gives zero operators, since u∧v = 0.

    Raises:
        ShapeError: If u and v live in different dimensions
    """
    if flavor_of(u) is not flavor_of(v):
        raise ShapeError("u and v must live in the same vector space")
    flavor = flavor_of(u)
    c = spin_normalization(u.tag, flavor)
    module = gamma_operator(u).commutator(gamma_operator(v)).scale(c)
    sigma = SpinorOperator(module.matrix)
    if flavor is Flavor.K3:
        return LorentzGenerator(vector_operator(u, v), sigma)
    return LorentzGenerator(
        vector_operator(u, v),
        sigma,
        sigma.block(Chirality.PLUS),
        sigma.block(Chirality.MINUS),
    )
