"""Vectors in dimensions k+2 and k+3.

A vector in k+2 dimensions is the 2×2 hermitian matrix

    A = [[t + x, y], [y*, t − x]]

over a division algebra K of dimension k. Its Minkowski norm is −det(A), and
trace reversal Ã = A − tr(A)·1 flips the sign of t. A vector in k+3
dimensions adds one spatial coordinate a and is written as the block matrix
[[a, Ã], [A, −a]] acting on K⁴.

Real coordinates are ordered t, x, y₀..y_{k−1} (then a for k+3); this order
fixes the even basis of the supertranslation algebras.
"""

from collections.abc import Sequence
from fractions import Fraction
from typing import Any

from supercocycle_kit.algebra import DAElement, DAMatrix, conjugate, inner
from supercocycle_kit.exceptions import ShapeError
from supercocycle_kit.models.enums import AlgebraTag
from supercocycle_kit.protocols import as_scalar, is_zero


def vector_labels(tag: AlgebraTag, extra: bool = False) -> list[str]:
    """Coordinate labels t, x, y0.. (and a when ``extra``)."""
    labels = ["t", "x", *(f"y{i}" for i in range(tag.dimension))]
    return [*labels, "a"] if extra else labels


class VectorK2:
    """Hermitian 2×2 matrix over K, a vector in k+2 dimensions."""

    __slots__ = ("t", "x", "y")

    def __init__(self, t: Any, x: Any, y: DAElement) -> None:
        self.t = as_scalar(t)
        self.x = as_scalar(x)
        self.y = y

    @property
    def tag(self) -> AlgebraTag:
        return self.y.tag

    @classmethod
    def zero(cls, tag: AlgebraTag) -> "VectorK2":
        return cls(Fraction(0), Fraction(0), DAElement.zero(tag))

    @classmethod
    def from_coords(cls, tag: AlgebraTag, coords: Sequence[Any]) -> "VectorK2":
        """Inverse of :meth:`to_coords`.

        Raises:
            ShapeError: If the coordinate count is not k+2
        """
        if len(coords) != tag.dimension + 2:
            raise ShapeError(f"k+2 vectors over {tag.value} need {tag.dimension + 2} coordinates")
        return cls(coords[0], coords[1], DAElement(tag, coords[2:]))

    @classmethod
    def basis(cls, tag: AlgebraTag, index: int) -> "VectorK2":
        """Unit coordinate vector in the t, x, y₀.. order."""
        n = tag.dimension + 2
        return cls.from_coords(tag, [Fraction(int(i == index)) for i in range(n)])

    def to_coords(self) -> list[Any]:
        return [self.t, self.x, *self.y.coords]

    def as_matrix(self) -> DAMatrix:
        """The hermitian matrix [[t+x, y], [y*, t−x]]."""
        tag = self.tag
        return DAMatrix(
            [
                [DAElement.real(tag, self.t + self.x), self.y],
                [conjugate(self.y), DAElement.real(tag, self.t - self.x)],
            ]
        )

    def __add__(self, other: "VectorK2") -> "VectorK2":
        return VectorK2(self.t + other.t, self.x + other.x, self.y + other.y)

    def __sub__(self, other: "VectorK2") -> "VectorK2":
        return VectorK2(self.t - other.t, self.x - other.x, self.y - other.y)

    def __neg__(self) -> "VectorK2":
        return VectorK2(-self.t, -self.x, -self.y)

    def __mul__(self, scalar: Any) -> "VectorK2":
        return VectorK2(self.t * scalar, self.x * scalar, self.y * scalar)

    def __rmul__(self, scalar: Any) -> "VectorK2":
        return VectorK2(scalar * self.t, scalar * self.x, scalar * self.y)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VectorK2):
            return bool(self.t == other.t) and bool(self.x == other.x) and self.y == other.y
        if is_zero(other):
            return self.is_zero()
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return is_zero(self.t) and is_zero(self.x) and self.y.is_zero()

    def __repr__(self) -> str:
        return f"VectorK2(t={self.t}, x={self.x}, y={list(self.y.coords)})"


class VectorK3:
    """Vector (a, A) in k+3 dimensions, the matrix [[a, Ã], [A, −a]]."""

    __slots__ = ("a", "inner")

    def __init__(self, a: Any, inner: VectorK2) -> None:
        self.a = as_scalar(a)
        self.inner = inner

    @property
    def tag(self) -> AlgebraTag:
        return self.inner.tag

    @classmethod
    def zero(cls, tag: AlgebraTag) -> "VectorK3":
        return cls(Fraction(0), VectorK2.zero(tag))

    @classmethod
    def embed(cls, vector: VectorK2) -> "VectorK3":
        """Include V in 𝒱 as the a = 0 slice."""
        return cls(Fraction(0), vector)

    @classmethod
    def from_coords(cls, tag: AlgebraTag, coords: Sequence[Any]) -> "VectorK3":
        """Inverse of :meth:`to_coords` (a is the last coordinate).

        Raises:
            ShapeError: If the coordinate count is not k+3
        """
        if len(coords) != tag.dimension + 3:
            raise ShapeError(f"k+3 vectors over {tag.value} need {tag.dimension + 3} coordinates")
        return cls(coords[-1], VectorK2.from_coords(tag, coords[:-1]))

    @classmethod
    def basis(cls, tag: AlgebraTag, index: int) -> "VectorK3":
        n = tag.dimension + 3
        return cls.from_coords(tag, [Fraction(int(i == index)) for i in range(n)])

    def to_coords(self) -> list[Any]:
        return [*self.inner.to_coords(), self.a]

    def as_matrix(self) -> DAMatrix:
        """The 4×4 K-matrix [[a·1, Ã], [A, −a·1]]."""
        tag = self.tag
        upper = trace_reversal(self.inner).as_matrix().entries
        lower = self.inner.as_matrix().entries
        zero = DAElement.zero(tag)
        a_pos, a_neg = DAElement.real(tag, self.a), DAElement.real(tag, -self.a)
        return DAMatrix(
            [
                [a_pos, zero, *upper[0]],
                [zero, a_pos, *upper[1]],
                [*lower[0], a_neg, zero],
                [*lower[1], zero, a_neg],
            ]
        )

    def __add__(self, other: "VectorK3") -> "VectorK3":
        return VectorK3(self.a + other.a, self.inner + other.inner)

    def __sub__(self, other: "VectorK3") -> "VectorK3":
        return VectorK3(self.a - other.a, self.inner - other.inner)

    def __neg__(self) -> "VectorK3":
        return VectorK3(-self.a, -self.inner)

    def __mul__(self, scalar: Any) -> "VectorK3":
        return VectorK3(self.a * scalar, self.inner * scalar)

    def __rmul__(self, scalar: Any) -> "VectorK3":
        return VectorK3(scalar * self.a, scalar * self.inner)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VectorK3):
            return bool(self.a == other.a) and self.inner == other.inner
        if is_zero(other):
            return self.is_zero()
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return is_zero(self.a) and self.inner.is_zero()

    def __repr__(self) -> str:
        return f"VectorK3(a={self.a}, inner={self.inner!r})"


def trace_reversal(vector: VectorK2) -> VectorK2:
    """Ã = A − tr(A)·1, i.e. (t, x, y) ↦ (−t, x, y)."""
    return VectorK2(-vector.t, vector.x, vector.y)


def minkowski_g(a: VectorK2, b: VectorK2) -> Any:
    """g(A, B) = ½ Re tr(AB̃) = −tt′ + xx′ + Re(yy′*); g(A, A) = −det(A)."""
    return -a.t * b.t + a.x * b.x + inner(a.y, b.y)


def minkowski_h(a: VectorK3, b: VectorK3) -> Any:
    """h(𝒜, ℬ) = g(A, B) + ab, of signature (k+2, 1)."""
    return minkowski_g(a.inner, b.inner) + a.a * b.a


def determinant(vector: VectorK2) -> Any:
    """det(A) = t² − x² − |y|²."""
    return -minkowski_g(vector, vector)
