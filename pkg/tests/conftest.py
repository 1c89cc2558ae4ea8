"""Pytest configuration and shared fixtures."""

import pytest
from hypothesis import strategies as st

from supercocycle_kit import ConfigFactory, KitConfig
from supercocycle_kit.algebra import DAElement
from supercocycle_kit.models.enums import AlgebraTag
from supercocycle_kit.utils.sampling import RationalSampler

ALL_TAGS = list(AlgebraTag)

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def elements(tag: AlgebraTag) -> st.SearchStrategy[DAElement]:
    """Hypothesis strategy for division algebra elements with small coordinates."""
    return st.lists(small_rationals, min_size=tag.dimension, max_size=tag.dimension).map(
        lambda coords: DAElement(tag, coords)
    )


@pytest.fixture
def sampler() -> RationalSampler:
    """Create a seeded sampler.

    Returns:
        Sampler with a fixed seed
    """
    return RationalSampler(seed=20260101)


@pytest.fixture
def kit_config() -> KitConfig:
    """Create a small, fast configuration.

    Returns:
        Configuration with few samples and k = 1 only
    """
    return ConfigFactory.create(seed=7, samples=3, division_dimensions=[1])
