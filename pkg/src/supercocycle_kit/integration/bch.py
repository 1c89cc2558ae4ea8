"""Group law of an exponential group with a 2-step nilpotent Lie algebra.

When all brackets of brackets vanish the Baker–Campbell–Hausdorff series
stops after one term:

    exp(X) exp(Y) = exp(X + Y + ½[X, Y])

and the Zassenhaus formula reads exp(X + Y) = exp(X) exp(Y − ½[X, Y]).
Elements may carry coefficients in any ring (rationals, polynomials,
Grassmann numbers), since only :func:`~supercocycle_kit.superalgebra.bracket`
is used.
"""

import logging
from fractions import Fraction
from functools import cache

from supercocycle_kit.exceptions import NilpotencyError
from supercocycle_kit.superalgebra import (
    GradedElement,
    LieSuperalgebra,
    bracket,
    is_two_step_nilpotent,
)

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


@cache
def _two_step(g: LieSuperalgebra) -> bool:
    return is_two_step_nilpotent(g)


def require_two_step(g: LieSuperalgebra) -> None:
    """Raise NilpotencyError unless [g, [g, g]] = 0."""
    if not _two_step(g):
        raise NilpotencyError(
            f"{g.name} is not 2-step nilpotent", details={"dimension": g.basis.dimensions}
        )


def bch2(x: GradedElement, y: GradedElement) -> GradedElement:
    """log(exp X · exp Y) = X + Y + ½[X, Y].

    Example:
        >>> h = build_heisenberg()
        >>> bch2(h.basis_element("p"), h.basis_element("q")).support()
        ['p', 'q', 'z']

    Raises:
        NilpotencyError: If the parent algebra is not 2-step nilpotent
    """
    require_two_step(x.parent)
    return x + y + bracket(x, y) * HALF


def zassenhaus_split(x: GradedElement, y: GradedElement) -> tuple[GradedElement, GradedElement]:
    """(X, Y − ½[X, Y]), so that exp(X + Y) = exp(X) exp(Y − ½[X, Y])."""
    require_two_step(x.parent)
    return x, y - bracket(x, y) * HALF


class GroupElement:
    """exp(X) in the simply connected group of a 2-step nilpotent algebra.

    The identity is exp(0) and the inverse of exp(X) is exp(−X).
    """

    __slots__ = ("log",)

    def __init__(self, log: GradedElement) -> None:
        require_two_step(log.parent)
        self.log = log

    @classmethod
    def identity(cls, g: LieSuperalgebra) -> "GroupElement":
        return cls(g.zero())

    @property
    def parent(self) -> LieSuperalgebra:
        return self.log.parent

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(bch2(self.log, other.log))

    def inverse(self) -> "GroupElement":
        return GroupElement(-self.log)

    def is_identity(self) -> bool:
        return self.log.is_zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.log == other.log

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"exp({self.log!r})"


def product(elements: list[GroupElement], g: LieSuperalgebra) -> GroupElement:
    """g₁ g₂ ⋯ g_n (the identity for an empty list)."""
    result = GroupElement.identity(g)
    for element in elements:
        result = result * element
    return result
