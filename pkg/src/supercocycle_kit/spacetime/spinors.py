"""Spinors, the Clifford action and the spinor-to-vector brackets.

In k+2 dimensions the half-spinor spaces are S₊ = S₋ = K². A vector A acts
by γ(A)ψ = Aψ from S₊ to S₋ and by γ̃(A)φ = Ãφ from S₋ to S₊; acting twice
multiplies by g(A, A). The pairing ⟨ψ, φ⟩ = Re(ψ†φ) couples S₊ with S₋, and
the bracket [ψ, φ] is the unique vector with g([ψ, φ], A) = ⟨ψ, γ(A)φ⟩ on S₊
(⟨ψ, γ̃(A)φ⟩ on S₋).

In k+3 dimensions spinors are Ψ = (ψ₁, ψ₂) ∈ 𝒮 = S₊ ⊕ S₋, vectors act by the
block matrix [[a, Ã], [A, −a]], the form is ⟨Ψ, Φ⟩ = Re(Ψ†Γ⁰Φ) with
Γ⁰ = [[0, −1], [1, 0]], and [Ψ, Φ] is fixed by h([Ψ, Φ], 𝒜) = ⟨Ψ, 𝒜Φ⟩.

Every Clifford composition is done one action at a time, never by
multiplying K-matrices first.
"""

from collections.abc import Sequence
from fractions import Fraction
from typing import Any, overload

from supercocycle_kit.algebra import (
    DAElement,
    DAMatrix,
    conjugate,
    dam_adjoint,
    dam_multiply,
    inner,
)
from supercocycle_kit.exceptions import ChiralityError, ShapeError, TagMismatchError
from supercocycle_kit.models.enums import AlgebraTag, Chirality
from supercocycle_kit.protocols import is_zero

from .vectors import VectorK2, VectorK3, minkowski_g, minkowski_h, trace_reversal


def spinor_labels(tag: AlgebraTag, big: bool = False) -> list[str]:
    """Real coordinate labels s0.. of S₊ (or of 𝒮 when ``big``)."""
    count = (4 if big else 2) * tag.dimension
    return [f"s{i}" for i in range(count)]


class SpinorK2:
    """Half spinor (ψ₁, ψ₂) ∈ K² of a given chirality."""

    __slots__ = ("chirality", "upper", "lower")

    def __init__(self, chirality: Chirality, upper: DAElement, lower: DAElement) -> None:
        if upper.tag is not lower.tag:
            raise TagMismatchError("spinor entries must share one algebra tag")
        self.chirality = chirality
        self.upper = upper
        self.lower = lower

    @property
    def tag(self) -> AlgebraTag:
        return self.upper.tag

    @classmethod
    def zero(cls, tag: AlgebraTag, chirality: Chirality) -> "SpinorK2":
        return cls(chirality, DAElement.zero(tag), DAElement.zero(tag))

    @classmethod
    def from_coords(
        cls, tag: AlgebraTag, chirality: Chirality, coords: Sequence[Any]
    ) -> "SpinorK2":
        """Build from 2k real coordinates (upper entry first).

        Raises:
            ShapeError: If the coordinate count is not 2k
        """
        k = tag.dimension
        if len(coords) != 2 * k:
            raise ShapeError(f"half spinors over {tag.value} need {2 * k} coordinates")
        return cls(chirality, DAElement(tag, coords[:k]), DAElement(tag, coords[k:]))

    @classmethod
    def basis(cls, tag: AlgebraTag, chirality: Chirality, index: int) -> "SpinorK2":
        n = 2 * tag.dimension
        return cls.from_coords(tag, chirality, [Fraction(int(i == index)) for i in range(n)])

    def to_coords(self) -> list[Any]:
        return [*self.upper.coords, *self.lower.coords]

    def as_matrix(self) -> DAMatrix:
        """The 2×1 column over K."""
        return DAMatrix([[self.upper], [self.lower]])

    def _check(self, other: "SpinorK2") -> None:
        if other.chirality is not self.chirality:
            raise ChiralityError(
                "cannot combine spinors of different chirality",
                details={"left": self.chirality.value, "right": other.chirality.value},
            )

    def __add__(self, other: "SpinorK2") -> "SpinorK2":
        self._check(other)
        return SpinorK2(self.chirality, self.upper + other.upper, self.lower + other.lower)

    def __sub__(self, other: "SpinorK2") -> "SpinorK2":
        self._check(other)
        return SpinorK2(self.chirality, self.upper - other.upper, self.lower - other.lower)

    def __neg__(self) -> "SpinorK2":
        return SpinorK2(self.chirality, -self.upper, -self.lower)

    def __mul__(self, scalar: Any) -> "SpinorK2":
        return SpinorK2(self.chirality, self.upper * scalar, self.lower * scalar)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SpinorK2):
            return (
                self.chirality is other.chirality
                and self.upper == other.upper
                and self.lower == other.lower
            )
        if is_zero(other):
            return self.is_zero()
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return self.upper.is_zero() and self.lower.is_zero()

    def __repr__(self) -> str:
        return f"SpinorK2({self.chirality.value}, {self.to_coords()})"


class SpinorK3:
    """Spinor Ψ = (ψ₁, ψ₂) with ψ₁ ∈ S₊ and ψ₂ ∈ S₋."""

    __slots__ = ("plus", "minus")

    def __init__(self, plus: SpinorK2, minus: SpinorK2) -> None:
        if plus.chirality is not Chirality.PLUS or minus.chirality is not Chirality.MINUS:
            raise ChiralityError("k+3 spinors need an S₊ part followed by an S₋ part")
        if plus.tag is not minus.tag:
            raise TagMismatchError("spinor parts must share one algebra tag")
        self.plus = plus
        self.minus = minus

    @property
    def tag(self) -> AlgebraTag:
        return self.plus.tag

    @classmethod
    def zero(cls, tag: AlgebraTag) -> "SpinorK3":
        return cls(SpinorK2.zero(tag, Chirality.PLUS), SpinorK2.zero(tag, Chirality.MINUS))

    @classmethod
    def from_coords(cls, tag: AlgebraTag, coords: Sequence[Any]) -> "SpinorK3":
        """Build from 4k real coordinates, the S₊ part first.

        Raises:
            ShapeError: If the coordinate count is not 4k
        """
        half = 2 * tag.dimension
        if len(coords) != 2 * half:
            raise ShapeError(f"spinors in k+3 over {tag.value} need {2 * half} coordinates")
        return cls(
            SpinorK2.from_coords(tag, Chirality.PLUS, coords[:half]),
            SpinorK2.from_coords(tag, Chirality.MINUS, coords[half:]),
        )

    @classmethod
    def basis(cls, tag: AlgebraTag, index: int) -> "SpinorK3":
        n = 4 * tag.dimension
        return cls.from_coords(tag, [Fraction(int(i == index)) for i in range(n)])

    def to_coords(self) -> list[Any]:
        return [*self.plus.to_coords(), *self.minus.to_coords()]

    def __add__(self, other: "SpinorK3") -> "SpinorK3":
        return SpinorK3(self.plus + other.plus, self.minus + other.minus)

    def __sub__(self, other: "SpinorK3") -> "SpinorK3":
        return SpinorK3(self.plus - other.plus, self.minus - other.minus)

    def __neg__(self) -> "SpinorK3":
        return SpinorK3(-self.plus, -self.minus)

    def __mul__(self, scalar: Any) -> "SpinorK3":
        return SpinorK3(self.plus * scalar, self.minus * scalar)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SpinorK3):
            return self.plus == other.plus and self.minus == other.minus
        if is_zero(other):
            return self.plus.is_zero() and self.minus.is_zero()
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"SpinorK3({self.to_coords()})"


# Clifford action


def _matrix_apply(v: VectorK2, psi: SpinorK2, target: Chirality) -> SpinorK2:
    diagonal_top = v.t + v.x
    diagonal_bottom = v.t - v.x
    upper = psi.upper * diagonal_top + v.y * psi.lower
    lower = conjugate(v.y) * psi.upper + psi.lower * diagonal_bottom
    return SpinorK2(target, upper, lower)


def gamma(vector: VectorK2, psi: SpinorK2) -> SpinorK2:
    """γ(A)ψ = Aψ, from S₊ to S₋.

    Raises:
        ChiralityError: If ψ is not in S₊
    """
    if psi.chirality is not Chirality.PLUS:
        raise ChiralityError("γ acts on S₊")
    return _matrix_apply(vector, psi, Chirality.MINUS)


def gamma_tilde(vector: VectorK2, phi: SpinorK2) -> SpinorK2:
    """γ̃(A)φ = Ãφ, from S₋ to S₊.

    Raises:
        ChiralityError: If φ is not in S₋
    """
    if phi.chirality is not Chirality.MINUS:
        raise ChiralityError("γ̃ acts on S₋")
    return _matrix_apply(trace_reversal(vector), phi, Chirality.PLUS)


@overload
def clifford_act(vector: VectorK2, spinor: SpinorK2) -> SpinorK2: ...


@overload
def clifford_act(vector: VectorK3, spinor: SpinorK3) -> SpinorK3: ...


def clifford_act(vector: VectorK2 | VectorK3, spinor: SpinorK2 | SpinorK3) -> Any:
    """Clifford action of a vector on a spinor.

    In k+2 dimensions S₊ spinors go through γ and S₋ spinors through γ̃. In
    k+3 dimensions 𝒜(ψ₁, ψ₂) = (aψ₁ + Ãψ₂, Aψ₁ − aψ₂).

    Raises:
        ShapeError: If a k+2 vector meets a k+3 spinor or vice versa
    """
    if isinstance(vector, VectorK2) and isinstance(spinor, SpinorK2):
        if spinor.chirality is Chirality.PLUS:
            return gamma(vector, spinor)
        return gamma_tilde(vector, spinor)
    if isinstance(vector, VectorK3) and isinstance(spinor, SpinorK3):
        a, inner_vector = vector.a, vector.inner
        plus = spinor.plus * a + gamma_tilde(inner_vector, spinor.minus)
        minus = gamma(inner_vector, spinor.plus) - spinor.minus * a
        return SpinorK3(plus, minus)
    raise ShapeError(
        f"cannot act with {type(vector).__name__} on {type(spinor).__name__}"
    )


# Pairings and brackets


def _dot(psi: SpinorK2, phi: SpinorK2) -> Any:
    return inner(psi.upper, phi.upper) + inner(psi.lower, phi.lower)


def pairing(psi: SpinorK2, phi: SpinorK2) -> Any:
    """⟨ψ, φ⟩ = Re(ψ†φ) between spinors of opposite chirality.

    Raises:
        ChiralityError: If both spinors have the same chirality
    """
    if psi.chirality is phi.chirality:
        raise ChiralityError("the pairing couples S₊ with S₋")
    return _dot(psi, phi)


def pairing_big(psi: SpinorK3, phi: SpinorK3) -> Any:
    """⟨Ψ, Φ⟩ = Re(Ψ†Γ⁰Φ) = ⟨ψ₂, φ₁⟩ − ⟨ψ₁, φ₂⟩; skew-symmetric."""
    return pairing(psi.minus, phi.plus) - pairing(psi.plus, phi.minus)


def bracket_spinors(psi: SpinorK2, phi: SpinorK2) -> VectorK2:
    """Symmetric bracket of two half spinors of equal chirality.

    On S₊ this is the trace reversal of ψφ† + φψ†, on S₋ the hermitian
    matrix ψφ† + φψ† itself.

    Raises:
        ChiralityError: If the chiralities differ
    """
    psi._check(phi)
    upper = inner(psi.upper, phi.upper)
    lower = inner(psi.lower, phi.lower)
    y = psi.upper * conjugate(phi.lower) + phi.upper * conjugate(psi.lower)
    t = upper + lower
    if psi.chirality is Chirality.PLUS:
        t = -t
    return VectorK2(t, upper - lower, y)


def bracket_big(psi: SpinorK3, phi: SpinorK3) -> VectorK3:
    """[Ψ, Φ] with h([Ψ, Φ], 𝒜) = ⟨Ψ, 𝒜Φ⟩; symmetric."""
    vector = bracket_spinors(psi.minus, phi.minus) - bracket_spinors(psi.plus, phi.plus)
    a = _dot(psi.plus, phi.minus) + _dot(phi.plus, psi.minus)
    return VectorK3(a, vector)


def three_psi(psi: SpinorK2) -> SpinorK2:
    """[ψ, ψ]ψ, which vanishes for every ψ."""
    return clifford_act(bracket_spinors(psi, psi), psi)


def four_psi(psi: SpinorK3) -> VectorK3:
    """[Ψ, [Ψ, Ψ]Ψ], which vanishes for every Ψ."""
    return bracket_big(psi, clifford_act(bracket_big(psi, psi), psi))


def check_trilinear_sym(psi: SpinorK2, phi: SpinorK2, chi: SpinorK2) -> SpinorK2:
    """[ψ, φ]χ + [χ, ψ]φ + [φ, χ]ψ, the polarized 3-ψ expression.

    Raises:
        ChiralityError: If the three spinors do not share a chirality
    """
    return (
        clifford_act(bracket_spinors(psi, phi), chi)
        + clifford_act(bracket_spinors(chi, psi), phi)
        + clifford_act(bracket_spinors(phi, chi), psi)
    )


def spinor_quartic(theta: SpinorK2, psi: SpinorK2, phi: SpinorK2, chi: SpinorK2) -> Any:
    """⟨θ, [ψ, φ]χ⟩ for four spinors of one chirality."""
    return pairing(theta, clifford_act(bracket_spinors(psi, phi), chi))


def star_form(psi: SpinorK3, phi: SpinorK3, first: VectorK3, second: VectorK3) -> Any:
    """(Ψ * Φ)(𝒜, ℬ) = ⟨Ψ, (𝒜ℬ − ℬ𝒜)Φ⟩ with Clifford composition."""
    ab = clifford_act(first, clifford_act(second, phi))
    ba = clifford_act(second, clifford_act(first, phi))
    return pairing_big(psi, ab) - pairing_big(psi, ba)


def unit_vector_defect(vector: VectorK2, psi: SpinorK2, phi: SpinorK2) -> Any:
    """⟨γ̃(A)φ, γ(A)ψ⟩ − g(A, A)⟨ψ, φ⟩ for ψ ∈ S₊ and φ ∈ S₋."""
    lhs = pairing(gamma_tilde(vector, phi), gamma(vector, psi))
    return lhs - minkowski_g(vector, vector) * pairing(psi, phi)


def reflection_defect(vector: VectorK3, psi: SpinorK3, phi: SpinorK3) -> Any:
    """⟨𝒜Ψ, 𝒜Φ⟩ + h(𝒜, 𝒜)⟨Ψ, Φ⟩."""
    lhs = pairing_big(clifford_act(vector, psi), clifford_act(vector, phi))
    return lhs + minkowski_h(vector, vector) * pairing_big(psi, phi)


def gamma_zero(tag: AlgebraTag) -> DAMatrix:
    """Γ⁰ = [[0, −1], [1, 0]] as a 4×4 K-matrix."""
    one, zero = DAElement.one(tag), DAElement.zero(tag)
    return DAMatrix(
        [
            [zero, zero, -one, zero],
            [zero, zero, zero, -one],
            [one, zero, zero, zero],
            [zero, one, zero, zero],
        ]
    )


def gamma_zero_defect(vector: VectorK3) -> DAMatrix:
    """Γ⁰𝒜 + 𝒜†Γ⁰, the zero matrix for every 𝒜."""
    g0 = gamma_zero(vector.tag)
    matrix = vector.as_matrix()
    return dam_multiply(g0, matrix) + dam_multiply(dam_adjoint(matrix), g0)
