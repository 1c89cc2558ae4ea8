"""Matrices over a division algebra and the real-trace calculus.

Products of K-matrices use one K-product per term, so no associativity is
assumed. The real trace Re tr(ABC) is nonetheless associative and cyclic for
all four algebras, which is what the spinor identities rely on.
"""

from collections.abc import Sequence
from fractions import Fraction
from typing import Any

from supercocycle_kit.exceptions import ShapeError, TagMismatchError
from supercocycle_kit.models.enums import AlgebraTag

from .division_algebra import DAElement, conjugate, multiply, re


class DAMatrix:
    """Rectangular matrix of division-algebra elements sharing one tag."""

    __slots__ = ("tag", "entries")

    def __init__(self, entries: Sequence[Sequence[DAElement]]) -> None:
        if not entries or not entries[0]:
            raise ShapeError("matrices need at least one row and one column")
        width = len(entries[0])
        if any(len(row) != width for row in entries):
            raise ShapeError("matrix rows must have equal length")
        tag = entries[0][0].tag
        if any(e.tag is not tag for row in entries for e in row):
            raise TagMismatchError("matrix entries must share one algebra tag")
        self.tag: AlgebraTag = tag
        self.entries: tuple[tuple[DAElement, ...], ...] = tuple(tuple(row) for row in entries)

    @classmethod
    def identity(cls, tag: AlgebraTag, n: int) -> "DAMatrix":
        """n×n identity matrix."""
        return cls(
            [
                [DAElement.one(tag) if i == j else DAElement.zero(tag) for j in range(n)]
                for i in range(n)
            ]
        )

    @classmethod
    def zeros(cls, tag: AlgebraTag, rows: int, cols: int) -> "DAMatrix":
        """rows×cols zero matrix."""
        return cls([[DAElement.zero(tag) for _ in range(cols)] for _ in range(rows)])

    @property
    def shape(self) -> tuple[int, int]:
        """(rows, cols)."""
        return len(self.entries), len(self.entries[0])

    def __getitem__(self, index: tuple[int, int]) -> DAElement:
        i, j = index
        return self.entries[i][j]

    def __matmul__(self, other: "DAMatrix") -> "DAMatrix":
        return dam_multiply(self, other)

    def __add__(self, other: "DAMatrix") -> "DAMatrix":
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape} matrices")
        return DAMatrix(
            [
                [a + b for a, b in zip(ra, rb, strict=True)]
                for ra, rb in zip(self.entries, other.entries, strict=True)
            ]
        )

    def __sub__(self, other: "DAMatrix") -> "DAMatrix":
        return self + other.scale(Fraction(-1))

    def scale(self, value: Any) -> "DAMatrix":
        """Multiply every entry by a real scalar."""
        return DAMatrix([[e * value for e in row] for row in self.entries])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DAMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b
            for ra, rb in zip(self.entries, other.entries, strict=True)
            for a, b in zip(ra, rb, strict=True)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"DAMatrix({self.tag.value}, shape={self.shape})"


def dam_multiply(a: DAMatrix, b: DAMatrix) -> DAMatrix:
    """Matrix product over K.

    Raises:
        ShapeError: If the inner dimensions differ
        TagMismatchError: If the tags differ
    """
    if a.tag is not b.tag:
        raise TagMismatchError("cannot multiply matrices over different algebras")
    (m, n), (n2, p) = a.shape, b.shape
    if n != n2:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    rows = []
    for i in range(m):
        row = []
        for j in range(p):
            acc = DAElement.zero(a.tag)
            for r in range(n):
                acc = acc + multiply(a.entries[i][r], b.entries[r][j])
            row.append(acc)
        rows.append(row)
    return DAMatrix(rows)


def dam_adjoint(a: DAMatrix) -> DAMatrix:
    """Hermitian adjoint A† = (A*)ᵀ; an involution."""
    m, n = a.shape
    return DAMatrix([[conjugate(a.entries[i][j]) for i in range(m)] for j in range(n)])


def dam_trace(a: DAMatrix) -> DAElement:
    """Trace of a square matrix.

    Raises:
        ShapeError: If the matrix is not square
    """
    m, n = a.shape
    if m != n:
        raise ShapeError(f"trace needs a square matrix, got {a.shape}")
    acc = DAElement.zero(a.tag)
    for i in range(m):
        acc = acc + a.entries[i][i]
    return acc


def re_trace(a: DAMatrix, b: DAMatrix, c: DAMatrix) -> Any:
    """Re tr((AB)C) for k×ℓ, ℓ×m and m×k matrices.

    Equal to Re tr(A(BC)) and invariant under cyclic permutations.

    Raises:
        ShapeError: If the shapes do not compose to a square product
    """
    product = dam_multiply(dam_multiply(a, b), c)
    return re(dam_trace(product))
