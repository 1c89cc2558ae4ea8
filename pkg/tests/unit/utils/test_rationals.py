"""Tests for exact rational encoding."""

from fractions import Fraction

import pytest

from supercocycle_kit.exceptions import SerializationError
from supercocycle_kit.utils import format_rational, parse_rational


class TestFormatRational:
    """Tests for format_rational."""

    def test_fractions(self) -> None:
        """Test num/den output with the sign on the numerator."""
        assert format_rational(Fraction(-1, 12)) == "-1/12"
        assert format_rational(Fraction(2, 4)) == "1/2"

    def test_integers(self) -> None:
        """Test that integral values drop the denominator."""
        assert format_rational(3) == "3"
        assert format_rational(Fraction(6, 3)) == "2"
        assert format_rational(0) == "0"


class TestParseRational:
    """Tests for parse_rational."""

    def test_strings_and_ints(self) -> None:
        """Test the accepted encodings."""
        assert parse_rational("-3/2") == Fraction(-3, 2)
        assert parse_rational(" 7 ") == 7
        assert parse_rational(4) == Fraction(4)
        assert parse_rational(Fraction(1, 3)) == Fraction(1, 3)

    @pytest.mark.parametrize("value", [0.5, True, "0.5", "1e3", "1/0", "x", None])
    def test_rejected(self, value: object) -> None:
        """Test that floats, booleans and malformed strings raise."""
        with pytest.raises(SerializationError):
            parse_rational(value)
