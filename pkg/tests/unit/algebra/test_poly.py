"""Tests for sparse polynomials."""

from fractions import Fraction

import pytest

from supercocycle_kit.algebra import Poly, monomial


class TestPoly:
    """Test polynomial arithmetic."""

    def test_canonical_monomials(self):
        """Test that monomials are sorted and drop zero exponents."""
        assert monomial(t=2, s=1, u=0) == (("s", 1), ("t", 2))

    def test_cancellation_removes_terms(self):
        """Test that p − p is the zero polynomial."""
        t = Poly.variable("t")
        p = t * t + Fraction(1, 3) * t
        assert (p - p).is_zero()
        assert p - p == 0

    def test_product_and_power(self):
        """Test (s + t)² = s² + 2st + t²."""
        s, t = Poly.variable("s"), Poly.variable("t")
        assert (s + t) ** 2 == s * s + 2 * s * t + t * t

    def test_negative_power_raises(self):
        """Test that negative powers are rejected."""
        with pytest.raises(ValueError):
            Poly.variable("t") ** -1

    def test_compare_with_constant(self):
        """Test equality between a constant polynomial and a rational."""
        assert Poly.constant(Fraction(1, 2)) == Fraction(1, 2)
        assert Poly.variable("t") != Fraction(1, 2)

    def test_partial_derivative(self):
        """Test ∂_t (t³ s) = 3 t² s."""
        s, t = Poly.variable("s"), Poly.variable("t")
        assert (t**3 * s).partial("t") == 3 * t * t * s
        assert s.partial("t") == 0

    def test_integrate_unit_cube(self):
        """Test ∫∫ s t² ds dt = 1/6 and partial integration."""
        s, t = Poly.variable("s"), Poly.variable("t")
        assert (s * t * t).integrate_unit_cube(["s", "t"]) == Fraction(1, 6)
        assert (s * t).integrate_unit_cube(["s"]) == Fraction(1, 2) * t

    def test_substitute(self):
        """Test full and partial substitution."""
        s, t = Poly.variable("s"), Poly.variable("t")
        p = s * t + 1
        assert p.substitute({"s": Fraction(2), "t": Fraction(1, 4)}) == Fraction(3, 2)
        assert p.substitute({"s": Fraction(2)}) == 2 * t + 1

    def test_degree_and_variables(self):
        """Test degree_in and variables."""
        s, t = Poly.variable("s"), Poly.variable("t")
        p = s * t**3 + s
        assert p.degree_in("t") == 3
        assert p.degree_in("u") == 0
        assert p.variables() == {"s", "t"}
        assert p.coefficient({"s": 1}) == 1
