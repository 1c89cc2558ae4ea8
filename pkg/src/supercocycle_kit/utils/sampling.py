"""Seeded random rationals.

All randomized checks draw from :class:`RationalSampler` so a fixed seed
reproduces every sample.
"""

import random
from collections.abc import Sequence
from fractions import Fraction
from typing import TypeVar

from supercocycle_kit.models.config import SamplingConfig

T = TypeVar("T")


class RationalSampler:
    """Deterministic source of small random rationals.

    Example:
        >>> sampler = RationalSampler(seed=1)
        >>> isinstance(sampler.rational(), Fraction)
        True
    """

    def __init__(self, seed: int, max_numerator: int = 5, max_denominator: int = 3) -> None:
        self.seed = seed
        self.max_numerator = max_numerator
        self.max_denominator = max_denominator
        self._rng = random.Random(seed)

    @classmethod
    def from_config(cls, config: SamplingConfig, salt: str = "") -> "RationalSampler":
        """Build a sampler whose stream depends on the config seed and a salt.

        The salt keeps independent checks from sharing a stream, so running
        checks in any order (or in parallel) gives the same samples.
        """
        seed = config.seed
        for char in salt:
            seed = (seed * 131 + ord(char)) % (2**61 - 1)
        return cls(seed, config.max_numerator, config.max_denominator)

    def rational(self, allow_zero: bool = True) -> Fraction:
        """Draw p/q with |p| <= max_numerator, 1 <= q <= max_denominator."""
        while True:
            value = Fraction(
                self._rng.randint(-self.max_numerator, self.max_numerator),
                self._rng.randint(1, self.max_denominator),
            )
            if allow_zero or value != 0:
                return value

    def rationals(self, count: int) -> list[Fraction]:
        """Draw ``count`` rationals."""
        return [self.rational() for _ in range(count)]

    def integer(self, low: int, high: int) -> int:
        """Draw an integer in [low, high]."""
        return self._rng.randint(low, high)

    def choice(self, items: Sequence[T]) -> T:
        """Pick one element."""
        return items[self._rng.randrange(len(items))]

    def sample(self, items: Sequence[T], count: int) -> list[T]:
        """Pick ``count`` distinct elements."""
        return self._rng.sample(list(items), count)

    def chance(self, probability: float) -> bool:
        """Return True with the given probability."""
        return self._rng.random() < probability
