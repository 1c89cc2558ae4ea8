"""Exact rational string encoding.

Rationals travel through JSON as ``"num/den"`` strings (``"n"`` for
integers). Floats are rejected on the way in.
"""

from fractions import Fraction
from typing import Any

from supercocycle_kit.exceptions import SerializationError


def format_rational(value: Fraction | int) -> str:
    """Encode a rational as ``"num/den"`` (or ``"n"`` when integral).

    Example:
        >>> format_rational(Fraction(-1, 12))
        '-1/12'
        >>> format_rational(3)
        '3'
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(value: Any) -> Fraction:
    """Decode a ``"num/den"`` string or an int.

    Raises:
        SerializationError: For floats, booleans or malformed strings
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise SerializationError(f"rationals must be exact, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise SerializationError(f"rationals must be written as num/den, got {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise SerializationError(f"malformed rational {value!r}") from e
    raise SerializationError(f"cannot parse {type(value).__name__} as a rational")
