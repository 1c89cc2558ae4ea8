"""Protocol definitions for coefficient rings.

Division-algebra coordinates, Lie superalgebra elements and cochain values
are generic over their coefficient ring. Anything that supports ring
arithmetic and compares equal to ``0`` when it vanishes can be used:
``fractions.Fraction``, :class:`~supercocycle_kit.algebra.poly.Poly` and
:class:`~supercocycle_kit.supergeometry.grassmann.GrassmannElement` all
qualify.
"""

from fractions import Fraction
from typing import Any, Protocol, runtime_checkable


@runtime_checkable
class RingElement(Protocol):
    """Protocol for elements of a (possibly graded-commutative) ring.

    Products keep their operand order, so Grassmann-valued coefficients
    pick up the correct signs when multiplied.
    """

    def __add__(self, other: Any) -> Any: ...

    def __radd__(self, other: Any) -> Any: ...

    def __sub__(self, other: Any) -> Any: ...

    def __mul__(self, other: Any) -> Any: ...

    def __rmul__(self, other: Any) -> Any: ...

    def __neg__(self) -> Any: ...


def is_zero(value: Any) -> bool:
    """Return True when a ring element vanishes."""
    return bool(value == 0)


def as_scalar(value: Any) -> Any:
    """Coerce ints to Fractions, leaving ring elements untouched."""
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return value
