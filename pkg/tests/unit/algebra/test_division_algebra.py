"""Tests for the normed division algebras."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supercocycle_kit.algebra import (
    DAElement,
    associator,
    conjugate,
    im,
    inner,
    multiply,
    norm_sq,
    re,
)
from supercocycle_kit.exceptions import TagMismatchError
from supercocycle_kit.models.enums import AlgebraTag
from tests.conftest import ALL_TAGS, elements


class TestDAElement:
    """Test construction and basic arithmetic."""

    @pytest.mark.parametrize("tag", ALL_TAGS)
    def test_unit_and_zero(self, tag):
        """Test that 1 is a two-sided unit and 0 annihilates."""
        one, zero = DAElement.one(tag), DAElement.zero(tag)
        for i in range(tag.dimension):
            e = DAElement.basis(tag, i)
            assert one * e == e
            assert e * one == e
            assert zero * e == zero

    @pytest.mark.parametrize("tag", ALL_TAGS)
    def test_imaginary_units_square_to_minus_one(self, tag):
        """Test e_i² = −1 for every imaginary unit."""
        for i in range(1, tag.dimension):
            e = DAElement.basis(tag, i)
            assert e * e == -DAElement.one(tag)

    @pytest.mark.parametrize("tag", ALL_TAGS)
    def test_distinct_imaginary_units_anticommute(self, tag):
        """Test e_i e_j = −e_j e_i for distinct imaginary units."""
        for i in range(1, tag.dimension):
            for j in range(i + 1, tag.dimension):
                a, b = DAElement.basis(tag, i), DAElement.basis(tag, j)
                assert a * b == -(b * a)

    def test_wrong_coordinate_count(self):
        """Test that the coordinate count must match the tag."""
        with pytest.raises(TagMismatchError):
            DAElement(AlgebraTag.H, [1, 2, 3])

    def test_mixing_tags_raises(self):
        """Test that elements of different algebras do not combine."""
        with pytest.raises(TagMismatchError):
            DAElement.one(AlgebraTag.C) + DAElement.one(AlgebraTag.H)

    def test_scalar_multiplication(self):
        """Test multiplication by a rational."""
        a = DAElement(AlgebraTag.C, [1, 2])
        assert a * Fraction(1, 2) == DAElement(AlgebraTag.C, [Fraction(1, 2), 1])
        assert 2 * a == DAElement(AlgebraTag.C, [2, 4])

    def test_equality_with_zero(self):
        """Test comparison against the integer 0."""
        assert DAElement.zero(AlgebraTag.O) == 0
        assert DAElement.one(AlgebraTag.O) != 0


class TestProducts:
    """Test algebraic properties of the product."""

    @pytest.mark.parametrize("tag", [AlgebraTag.R, AlgebraTag.C, AlgebraTag.H])
    def test_associative_up_to_quaternions(self, tag):
        """Test that R, C and H are associative on basis units."""
        units = [DAElement.basis(tag, i) for i in range(tag.dimension)]
        for a in units:
            for b in units:
                for c in units:
                    assert associator(a, b, c) == 0

    def test_octonions_are_not_associative(self):
        """Test that some triple of octonion units has a nonzero associator."""
        units = [DAElement.basis(AlgebraTag.O, i) for i in range(8)]
        assert any(
            associator(a, b, c) != 0 for a in units[1:] for b in units[1:] for c in units[1:]
        )

    @pytest.mark.parametrize("tag", [AlgebraTag.R, AlgebraTag.C])
    def test_commutative_up_to_complex(self, tag):
        """Test that R and C are commutative."""
        a = DAElement(tag, [Fraction(i + 1, 3) for i in range(tag.dimension)])
        b = DAElement(tag, [Fraction(2 - i, 5) for i in range(tag.dimension)])
        assert a * b == b * a

    @given(data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_alternative_laws(self, data):
        """Test (aa)b = a(ab) and (ab)b = a(bb) on random octonions."""
        a = data.draw(elements(AlgebraTag.O))
        b = data.draw(elements(AlgebraTag.O))
        assert associator(a, a, b) == 0
        assert associator(a, b, b) == 0
        assert associator(a, b, a) == 0

    @given(data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_norm_is_multiplicative(self, data):
        """Test |ab|² = |a|²|b|² on random octonions."""
        a = data.draw(elements(AlgebraTag.O))
        b = data.draw(elements(AlgebraTag.O))
        assert norm_sq(multiply(a, b)) == norm_sq(a) * norm_sq(b)

    @given(data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_conjugation_reverses_products(self, data):
        """Test (ab)* = b*a*."""
        a = data.draw(elements(AlgebraTag.O))
        b = data.draw(elements(AlgebraTag.O))
        assert conjugate(a * b) == conjugate(b) * conjugate(a)

    @given(data=st.data())
    @settings(max_examples=30, deadline=None)
    def test_associator_is_imaginary_and_alternating(self, data):
        """Test Re[a, b, c] = 0 and [b, a, c] = −[a, b, c]."""
        a, b, c = (data.draw(elements(AlgebraTag.O)) for _ in range(3))
        value = associator(a, b, c)
        assert re(value) == 0
        assert associator(b, a, c) == -value
        assert associator(a, c, b) == -value


class TestParts:
    """Test real/imaginary parts and the inner product."""

    def test_re_and_im(self):
        """Test that a = Re(a) + Im(a)."""
        a = DAElement(AlgebraTag.H, [1, 2, 3, 4])
        assert re(a) == 1
        assert DAElement.real(AlgebraTag.H, re(a)) + im(a) == a

    def test_norm_is_a_times_conjugate(self):
        """Test |a|² = Re(a a*) and a a* is real."""
        a = DAElement(AlgebraTag.O, [Fraction(i, 2) for i in range(8)])
        product = a * conjugate(a)
        assert re(product) == norm_sq(a)
        assert im(product) == 0

    def test_inner_product(self):
        """Test the Euclidean inner product."""
        a = DAElement(AlgebraTag.C, [1, 2])
        b = DAElement(AlgebraTag.C, [3, -1])
        assert inner(a, b) == 1
        assert inner(a, a) == norm_sq(a)
