"""Exact arithmetic in the normed division algebras R, C, H and O.

Elements carry their algebra tag and k coordinates on the basis
{1, e₁, …, e_{k−1}}. The multiplication table is generated once per algebra
by Cayley–Dickson doubling from R, with

    (a, b)(c, d) = (ac − d*b, da + bc*)

and basis e_{n+i} = (0, e_i) in the doubled algebra. In H this gives
e₁e₂ = e₃.

Coordinates may come from any commutative ring (Fractions, polynomials), so
the same code evaluates identities both at random rational points and
symbolically.
"""

from collections.abc import Sequence
from fractions import Fraction
from functools import cache
from typing import Any

from supercocycle_kit.exceptions import TagMismatchError
from supercocycle_kit.models.enums import AlgebraTag
from supercocycle_kit.protocols import as_scalar, is_zero

# table[i][j] = (sign, k) means e_i * e_j = sign * e_k
MultiplicationTable = tuple[tuple[tuple[int, int], ...], ...]


def _conj_vector(v: Sequence[int]) -> list[int]:
    return [v[0], *(-x for x in v[1:])]


def _cd_multiply(a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = len(a)
    if n == 1:
        return [a[0] * b[0]]
    h = n // 2
    a1, a2 = a[:h], a[h:]
    c, d = b[:h], b[h:]
    ac = _cd_multiply(a1, c)
    d_b = _cd_multiply(_conj_vector(d), a2)
    da = _cd_multiply(d, a1)
    b_c = _cd_multiply(a2, _conj_vector(c))
    left = [x - y for x, y in zip(ac, d_b, strict=True)]
    right = [x + y for x, y in zip(da, b_c, strict=True)]
    return left + right


@cache
def multiplication_table(tag: AlgebraTag) -> MultiplicationTable:
    """Signed index table of basis products for ``tag``.

    Example:
        >>> multiplication_table(AlgebraTag.H)[1][2]
        (1, 3)
    """
    k = tag.dimension
    rows = []
    for i in range(k):
        row = []
        for j in range(k):
            ei = [1 if n == i else 0 for n in range(k)]
            ej = [1 if n == j else 0 for n in range(k)]
            product = _cd_multiply(ei, ej)
            (idx,) = [n for n, x in enumerate(product) if x]
            row.append((product[idx], idx))
        rows.append(tuple(row))
    return tuple(rows)


class DAElement:
    """Element of a normed division algebra with exact coordinates.

    Values are immutable; arithmetic returns new elements.
    """

    __slots__ = ("tag", "coords")

    def __init__(self, tag: AlgebraTag, coords: Sequence[Any]) -> None:
        if len(coords) != tag.dimension:
            raise TagMismatchError(
                f"{tag.value} elements need {tag.dimension} coordinates, got {len(coords)}"
            )
        self.tag = tag
        self.coords: tuple[Any, ...] = tuple(as_scalar(c) for c in coords)

    @classmethod
    def zero(cls, tag: AlgebraTag) -> "DAElement":
        """The additive identity."""
        return cls(tag, [Fraction(0)] * tag.dimension)

    @classmethod
    def one(cls, tag: AlgebraTag) -> "DAElement":
        """The unit element 1."""
        return cls.real(tag, Fraction(1))

    @classmethod
    def real(cls, tag: AlgebraTag, value: Any) -> "DAElement":
        """Embed a real scalar."""
        return cls(tag, [value] + [Fraction(0)] * (tag.dimension - 1))

    @classmethod
    def basis(cls, tag: AlgebraTag, index: int) -> "DAElement":
        """The basis element e_index (e₀ = 1)."""
        return cls(tag, [Fraction(int(n == index)) for n in range(tag.dimension)])

    def _check(self, other: "DAElement") -> None:
        if other.tag is not self.tag:
            raise TagMismatchError(
                f"cannot combine {self.tag.value} and {other.tag.value} elements",
                details={"left": self.tag.value, "right": other.tag.value},
            )

    def __add__(self, other: "DAElement") -> "DAElement":
        self._check(other)
        return DAElement(self.tag, [a + b for a, b in zip(self.coords, other.coords, strict=True)])

    def __sub__(self, other: "DAElement") -> "DAElement":
        self._check(other)
        return DAElement(self.tag, [a - b for a, b in zip(self.coords, other.coords, strict=True)])

    def __neg__(self) -> "DAElement":
        return DAElement(self.tag, [-a for a in self.coords])

    def __mul__(self, other: Any) -> "DAElement":
        if isinstance(other, DAElement):
            return multiply(self, other)
        return DAElement(self.tag, [a * other for a in self.coords])

    def __rmul__(self, other: Any) -> "DAElement":
        return DAElement(self.tag, [other * a for a in self.coords])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DAElement):
            return self.tag is other.tag and all(
                bool(a == b) for a, b in zip(self.coords, other.coords, strict=True)
            )
        if is_zero(other):
            return self.is_zero()
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        """True when every coordinate vanishes."""
        return all(is_zero(c) for c in self.coords)

    def conjugate(self) -> "DAElement":
        """a* (negate the imaginary coordinates)."""
        return conjugate(self)

    def __repr__(self) -> str:
        return f"DAElement({self.tag.value}, {list(self.coords)})"


def multiply(a: DAElement, b: DAElement) -> DAElement:
    """Product ab using the Cayley–Dickson table.

    Raises:
        TagMismatchError: If a and b live in different algebras
    """
    a._check(b)
    table = multiplication_table(a.tag)
    acc: list[Any] = [Fraction(0)] * a.tag.dimension
    for i, ai in enumerate(a.coords):
        if is_zero(ai):
            continue
        row = table[i]
        for j, bj in enumerate(b.coords):
            if is_zero(bj):
                continue
            sign, k = row[j]
            term = ai * bj
            acc[k] = acc[k] + term if sign > 0 else acc[k] - term
    return DAElement(a.tag, acc)


def conjugate(a: DAElement) -> DAElement:
    """Conjugate a*, satisfying (ab)* = b*a*."""
    return DAElement(a.tag, [a.coords[0], *(-c for c in a.coords[1:])])


def re(a: DAElement) -> Any:
    """Real part Re(a) = (a + a*)/2."""
    return a.coords[0]


def im(a: DAElement) -> DAElement:
    """Imaginary part Im(a) = (a − a*)/2."""
    return DAElement(a.tag, [Fraction(0), *a.coords[1:]])


def norm_sq(a: DAElement) -> Any:
    """|a|², the real part of a·a*."""
    total: Any = Fraction(0)
    for c in a.coords:
        total = total + c * c
    return total


def inner(a: DAElement, b: DAElement) -> Any:
    """Euclidean inner product Re(ab*)."""
    a._check(b)
    total: Any = Fraction(0)
    for x, y in zip(a.coords, b.coords, strict=True):
        total = total + x * y
    return total


def associator(a: DAElement, b: DAElement, c: DAElement) -> DAElement:
    """[a, b, c] = (ab)c − a(bc); alternating and purely imaginary.

    Raises:
        TagMismatchError: If the arguments live in different algebras
    """
    a._check(b)
    a._check(c)
    return multiply(multiply(a, b), c) - multiply(a, multiply(b, c))
