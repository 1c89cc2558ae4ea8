"""Utility helpers: exact rational encoding and seeded sampling."""

from .rationals import format_rational, parse_rational
from .sampling import RationalSampler

__all__ = ["format_rational", "parse_rational", "RationalSampler"]
