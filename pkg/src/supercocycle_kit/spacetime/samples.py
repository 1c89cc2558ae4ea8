"""Random rational vectors and spinors for identity checks."""

from supercocycle_kit.algebra import DAElement
from supercocycle_kit.models.enums import AlgebraTag, Chirality
from supercocycle_kit.utils.sampling import RationalSampler

from .spinors import SpinorK2, SpinorK3
from .vectors import VectorK2, VectorK3


def random_element(tag: AlgebraTag, sampler: RationalSampler) -> DAElement:
    return DAElement(tag, sampler.rationals(tag.dimension))


def random_vector_k2(tag: AlgebraTag, sampler: RationalSampler) -> VectorK2:
    return VectorK2.from_coords(tag, sampler.rationals(tag.dimension + 2))


def random_vector_k3(tag: AlgebraTag, sampler: RationalSampler) -> VectorK3:
    return VectorK3.from_coords(tag, sampler.rationals(tag.dimension + 3))


def random_spinor_k2(
    tag: AlgebraTag, chirality: Chirality, sampler: RationalSampler
) -> SpinorK2:
    return SpinorK2.from_coords(tag, chirality, sampler.rationals(2 * tag.dimension))


def random_spinor_k3(tag: AlgebraTag, sampler: RationalSampler) -> SpinorK3:
    return SpinorK3.from_coords(tag, sampler.rationals(4 * tag.dimension))
