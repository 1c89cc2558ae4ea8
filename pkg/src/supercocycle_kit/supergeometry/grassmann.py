"""Grassmann algebras A = ΛRⁿ and their homomorphisms.

Elements are sparse maps from monomials to rationals. A monomial
θ_{i1}θ_{i2}⋯ with i1 < i2 < ⋯ is stored as the bitmask Σ 2^i, so the
product of two monomials is zero when the masks overlap and otherwise
carries the sign of the shuffle that sorts the concatenated generators.
"""

import logging
from collections.abc import Mapping, Sequence
from fractions import Fraction
from typing import Any

from supercocycle_kit.exceptions import ParentMismatchError, UsageError
from supercocycle_kit.models.enums import Parity
from supercocycle_kit.protocols import as_scalar
from supercocycle_kit.utils.sampling import RationalSampler

logger = logging.getLogger(__name__)


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def monomial_sign(a: int, b: int) -> int:
    """Sign of θ_a θ_b once sorted, or 0 if the monomials share a generator."""
    if a & b:
        return 0
    swaps = 0
    rest = b
    while rest:
        low = rest & -rest
        swaps += _popcount(a & ~((low << 1) - 1))
        rest ^= low
    return -1 if swaps % 2 else 1


class GrassmannAlgebra:
    """ΛRⁿ with generators θ1 … θn.

    Example:
        >>> A = GrassmannAlgebra(2)
        >>> t1, t2 = A.generators()
        >>> t2 * t1 == -(t1 * t2)
        True
    """

    __slots__ = ("n",)

    def __init__(self, n: int) -> None:
        if n < 0:
            raise UsageError(f"generator count must be >= 0, got {n}")
        self.n = n

    @property
    def dimension(self) -> int:
        return 1 << self.n

    def masks(self, parity: Parity | None = None) -> list[int]:
        """Basis monomials, optionally of one parity."""
        return [
            m for m in range(self.dimension) if parity is None or _popcount(m) % 2 == parity
        ]

    def element(self, terms: Mapping[int, Any] | None = None) -> "GrassmannElement":
        return GrassmannElement(self, terms or {})

    def scalar(self, value: Any) -> "GrassmannElement":
        return GrassmannElement(self, {0: value})

    def one(self) -> "GrassmannElement":
        return self.scalar(1)

    def zero(self) -> "GrassmannElement":
        return GrassmannElement(self, {})

    def generator(self, i: int) -> "GrassmannElement":
        """θ_i for 1 <= i <= n."""
        if not 1 <= i <= self.n:
            raise UsageError(f"θ{i} is not a generator of Λ R^{self.n}")
        return GrassmannElement(self, {1 << (i - 1): 1})

    def generators(self) -> list["GrassmannElement"]:
        return [self.generator(i) for i in range(1, self.n + 1)]

    def random(self, sampler: RationalSampler, parity: Parity) -> "GrassmannElement":
        return GrassmannElement(self, {m: sampler.rational() for m in self.masks(parity)})

    def random_even(self, sampler: RationalSampler) -> "GrassmannElement":
        """Random element of A₀."""
        return self.random(sampler, Parity.EVEN)

    def random_odd(self, sampler: RationalSampler) -> "GrassmannElement":
        """Random element of A₁ (zero when n = 0)."""
        return self.random(sampler, Parity.ODD)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GrassmannAlgebra) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("grassmann", self.n))

    def __repr__(self) -> str:
        return f"GrassmannAlgebra({self.n})"


class GrassmannElement:
    """Σ c_m θ^m in a Grassmann algebra."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: GrassmannAlgebra, terms: Mapping[int, Any]) -> None:
        self.algebra = algebra
        self.terms: dict[int, Fraction] = {}
        for mask, c in terms.items():
            if mask >> algebra.n:
                raise UsageError(f"monomial {mask:b} uses generators beyond θ{algebra.n}")
            if c != 0:
                self.terms[mask] = as_scalar(c)

    def _coerce(self, other: Any) -> "GrassmannElement | None":
        if isinstance(other, GrassmannElement):
            if other.algebra != self.algebra:
                raise ParentMismatchError(f"cannot combine {self.algebra!r} and {other.algebra!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.algebra.scalar(other)
        return None

    # Arithmetic

    def __add__(self, other: Any) -> "GrassmannElement":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        result = dict(self.terms)
        for m, c in rhs.terms.items():
            result[m] = result.get(m, Fraction(0)) + c
        return GrassmannElement(self.algebra, result)

    def __radd__(self, other: Any) -> "GrassmannElement":
        return self.__add__(other)

    def __neg__(self) -> "GrassmannElement":
        return GrassmannElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Any) -> "GrassmannElement":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Any) -> "GrassmannElement":
        return (-self) + other

    def __mul__(self, other: Any) -> "GrassmannElement":
        if isinstance(other, (int, Fraction)):
            return GrassmannElement(self.algebra, {m: c * other for m, c in self.terms.items()})
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        result: dict[int, Fraction] = {}
        for a, ca in self.terms.items():
            for b, cb in rhs.terms.items():
                sign = monomial_sign(a, b)
                if sign:
                    m = a | b
                    result[m] = result.get(m, Fraction(0)) + sign * ca * cb
        return GrassmannElement(self.algebra, result)

    def __rmul__(self, other: Any) -> "GrassmannElement":
        if isinstance(other, (int, Fraction)):
            return GrassmannElement(self.algebra, {m: other * c for m, c in self.terms.items()})
        return NotImplemented

    # Structure

    def parity(self) -> Parity | None:
        """EVEN or ODD for homogeneous elements (zero counts as both; EVEN is returned)."""
        parities = {_popcount(m) % 2 for m in self.terms}
        if len(parities) > 1:
            return None
        return Parity.ODD if parities == {1} else Parity.EVEN

    def is_even(self) -> bool:
        return all(_popcount(m) % 2 == 0 for m in self.terms)

    def is_odd(self) -> bool:
        return all(_popcount(m) % 2 == 1 for m in self.terms)

    def body(self) -> Fraction:
        """Degree-0 part."""
        return self.terms.get(0, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GrassmannElement):
            return other.algebra == self.algebra and other.terms == self.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {0: Fraction(other)}
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            gens = "".join(f"θ{i + 1}" for i in range(self.algebra.n) if m >> i & 1)
            parts.append(f"{c}" if not gens else f"{c}·{gens}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"GrassmannElement({self})"


class GrassmannHom:
    """Algebra homomorphism A → B fixed by odd images of the generators.

    Attributes:
        source: Domain A
        target: Codomain B
        images: f(θ_i) for each generator of A, all odd in B
    """

    __slots__ = ("source", "target", "images")

    def __init__(
        self,
        source: GrassmannAlgebra,
        target: GrassmannAlgebra,
        images: Sequence[GrassmannElement],
    ) -> None:
        if len(images) != source.n:
            raise UsageError(f"need {source.n} generator images, got {len(images)}")
        for i, image in enumerate(images, 1):
            if image.algebra != target:
                raise ParentMismatchError(f"image of θ{i} is not in {target!r}")
            if not image.is_odd():
                raise UsageError(f"image of θ{i} must be odd")
        self.source = source
        self.target = target
        self.images = list(images)

    @classmethod
    def identity(cls, algebra: GrassmannAlgebra) -> "GrassmannHom":
        return cls(algebra, algebra, algebra.generators())

    @classmethod
    def random(
        cls, source: GrassmannAlgebra, target: GrassmannAlgebra, sampler: RationalSampler
    ) -> "GrassmannHom":
        """Seeded homomorphism with random odd images."""
        return cls(source, target, [target.random_odd(sampler) for _ in range(source.n)])

    def apply(self, x: GrassmannElement) -> GrassmannElement:
        """f(x), multiplying generator images in increasing index order."""
        if x.algebra != self.source:
            raise ParentMismatchError(f"{x!r} is not in {self.source!r}")
        total = self.target.zero()
        for mask, c in x.terms.items():
            term = self.target.scalar(c)
            for i in range(self.source.n):
                if mask >> i & 1:
                    term = term * self.images[i]
            total = total + term
        return total

    def __call__(self, x: GrassmannElement) -> GrassmannElement:
        return self.apply(x)

    def compose(self, first: "GrassmannHom") -> "GrassmannHom":
        """self ∘ first."""
        if first.target != self.source:
            raise ParentMismatchError("homomorphisms are not composable")
        return GrassmannHom(first.source, self.target, [self.apply(x) for x in first.images])

    def __repr__(self) -> str:
        return f"GrassmannHom({self.source!r} -> {self.target!r})"
