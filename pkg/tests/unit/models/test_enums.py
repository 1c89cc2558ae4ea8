"""Tests for shared enumerations."""

import pytest

from supercocycle_kit.models.enums import AlgebraTag, Chirality, Flavor, Parity


class TestAlgebraTag:
    """Test AlgebraTag dimensions and lookup."""

    def test_dimensions(self):
        """Test the real dimension of each algebra."""
        assert [tag.dimension for tag in AlgebraTag] == [1, 2, 4, 8]

    def test_from_dimension(self):
        """Test lookup by dimension."""
        assert AlgebraTag.from_dimension(8) is AlgebraTag.O
        with pytest.raises(ValueError, match="dimension 3"):
            AlgebraTag.from_dimension(3)


class TestParity:
    """Test parsing of parities."""

    @pytest.mark.parametrize(
        ("value", "expected"),
        [
            ("even", Parity.EVEN),
            (" ODD ", Parity.ODD),
            ("1", Parity.ODD),
            (0, Parity.EVEN),
            (3, Parity.ODD),
        ],
    )
    def test_parse(self, value, expected):
        """Test strings and integers."""
        assert Parity.parse(value) is expected

    def test_parse_unknown(self):
        """Test that anything else is rejected."""
        with pytest.raises(ValueError, match="unknown parity"):
            Parity.parse("both")


class TestChiralityAndFlavor:
    """Test Chirality and Flavor helpers."""

    def test_opposite(self):
        """Test that opposite swaps the half-spinor spaces."""
        assert Chirality.PLUS.opposite() is Chirality.MINUS
        assert Chirality.MINUS.opposite() is Chirality.PLUS

    def test_spacetime_dimension(self):
        """Test k+2 and k+3 for the octonions."""
        assert Flavor.K2.spacetime_dimension(8) == 10
        assert Flavor.K3.spacetime_dimension(8) == 11
