"""Division algebra checks: alternativity, norms, associators and real traces."""

from functools import partial

from supercocycle_kit.algebra import (
    DAElement,
    DAMatrix,
    associator,
    conjugate,
    dam_adjoint,
    norm_sq,
    re,
    re_trace,
)
from supercocycle_kit.models.enums import AlgebraTag, Suite
from supercocycle_kit.spacetime import random_element
from supercocycle_kit.utils.sampling import RationalSampler

from .runner import Check, SuiteOptions, Witness, expect_equal, expect_zero


def _matrix(tag: AlgebraTag, sampler: RationalSampler) -> DAMatrix:
    return DAMatrix([[random_element(tag, sampler) for _ in range(2)] for _ in range(2)])


def _alternative(tag: AlgebraTag, options: SuiteOptions, check_id: str) -> Witness:
    sampler = options.sampler(check_id)
    samples = options.samples_for("division")
    for _ in range(samples):
        a, b = random_element(tag, sampler), random_element(tag, sampler)
        expect_zero(associator(a, a, b), "left alternative law fails", a=a, b=b)
        expect_zero(associator(a, b, b), "right alternative law fails", a=a, b=b)
        expect_zero(associator(a, b, a * b), "a, b generate a nonassociative algebra", a=a, b=b)
    return {"samples": samples}


def _norm(tag: AlgebraTag, options: SuiteOptions, check_id: str) -> Witness:
    sampler = options.sampler(check_id)
    samples = options.samples_for("division")
    for _ in range(samples):
        a, b = random_element(tag, sampler), random_element(tag, sampler)
        expect_equal(norm_sq(a * b), norm_sq(a) * norm_sq(b), "|ab|² ≠ |a|²|b|²", a=a, b=b)
        expect_equal(conjugate(a * b), conjugate(b) * conjugate(a), "(ab)* ≠ b*a*", a=a, b=b)
    return {"samples": samples}


def _imaginary_associator(tag: AlgebraTag, options: SuiteOptions, check_id: str) -> Witness:
    sampler = options.sampler(check_id)
    samples = options.samples_for("division")
    for _ in range(samples):
        a, b, c = (random_element(tag, sampler) for _ in range(3))
        value = associator(a, b, c)
        expect_zero(re(value), "associator has a real part", a=a, b=b, c=c)
        expect_equal(associator(b, a, c), -value, "associator is not alternating", a=a, b=b, c=c)
    return {"samples": samples}


def _cyclic_trace(tag: AlgebraTag, options: SuiteOptions, check_id: str) -> Witness:
    sampler = options.sampler(check_id)
    samples = options.samples_for("division")
    for _ in range(samples):
        a, b, c = (_matrix(tag, sampler) for _ in range(3))
        expect_equal(re_trace(b, c, a), re_trace(a, b, c), "Re tr is not cyclic", a=a, b=b, c=c)
        expect_equal(dam_adjoint(dam_adjoint(a)), a, "A†† ≠ A", a=a)
    return {"samples": samples}


def _units(tag: AlgebraTag, options: SuiteOptions, check_id: str) -> Witness:
    one = DAElement.one(tag)
    for i in range(tag.dimension):
        e = DAElement.basis(tag, i)
        expect_equal(one * e, e, "1 is not a unit", index=i)
        if i:
            expect_equal(e * e, -one, "imaginary unit does not square to -1", index=i)
    return {"dimension": tag.dimension}


_CHECKS = (
    ("alternative", "normed division algebras are alternative", _alternative),
    ("norm", "the norm is multiplicative and conjugation reverses products", _norm),
    ("associator", "the associator is alternating and purely imaginary", _imaginary_associator),
    ("re_trace", "Re tr(ABC) is cyclic for matrices over K", _cyclic_trace),
    ("units", "imaginary basis units square to -1", _units),
)


def checks(options: SuiteOptions) -> list[Check]:
    result = []
    for k in options.ks:
        tag = AlgebraTag.from_dimension(k)
        for name, anchor, fn in _CHECKS:
            check_id = f"division.{name}.{tag.value}"
            result.append(
                Check(check_id, Suite.DIVISION, anchor, partial(fn, tag, options, check_id))
            )
    return result
