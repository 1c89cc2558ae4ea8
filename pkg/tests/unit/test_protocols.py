"""Tests for the coefficient ring protocol and its helpers."""

from fractions import Fraction

from supercocycle_kit.algebra.poly import Poly
from supercocycle_kit.protocols import RingElement, as_scalar, is_zero
from supercocycle_kit.supergeometry import GrassmannAlgebra


class TestRingElementProtocol:
    """Tests for RingElement compliance."""

    def test_builtin_rings_satisfy_protocol(self):
        """Test that every coefficient ring used by the kit is a RingElement."""
        assert isinstance(Fraction(1, 2), RingElement)
        assert isinstance(Poly.variable("t"), RingElement)
        assert isinstance(GrassmannAlgebra(2).generator(1), RingElement)

    def test_custom_ring(self):
        """Test that a minimal user-defined ring satisfies the protocol."""

        class Mod2:
            """Integers modulo 2."""

            def __init__(self, value: int) -> None:
                self.value = value % 2

            def __add__(self, other):
                return Mod2(self.value + other.value)

            __radd__ = __add__

            def __sub__(self, other):
                return Mod2(self.value - other.value)

            def __mul__(self, other):
                return Mod2(self.value * other.value)

            __rmul__ = __mul__

            def __neg__(self):
                return self

            def __eq__(self, other):
                return self.value == (other.value if isinstance(other, Mod2) else other % 2)

        assert isinstance(Mod2(1), RingElement)
        assert is_zero(Mod2(1) + Mod2(1))

    def test_missing_operations(self):
        """Test that objects without ring arithmetic are rejected."""
        assert not isinstance("text", RingElement)
        assert not isinstance(None, RingElement)


class TestHelpers:
    """Tests for is_zero and as_scalar."""

    def test_is_zero(self):
        """Test vanishing across rings."""
        a = GrassmannAlgebra(1)
        assert is_zero(Fraction(0))
        assert is_zero(Poly())
        assert is_zero(a.zero())
        assert not is_zero(a.generator(1))
        assert not is_zero(Poly.variable("t"))

    def test_as_scalar(self):
        """Test that ints become Fractions and other values pass through."""
        assert as_scalar(3) == Fraction(3)
        assert isinstance(as_scalar(3), Fraction)
        assert as_scalar(True) is True
        t = Poly.variable("t")
        assert as_scalar(t) is t
