"""L∞ checks: slim Lie n-superalgebras satisfy the generalized Jacobi identity."""

from collections.abc import Callable
from functools import partial

from supercocycle_kit.cohomology import coboundary, make_j, random_cochain
from supercocycle_kit.exceptions import VerificationError
from supercocycle_kit.linfty import (
    LInftyData,
    build_heisenberg_2algebra,
    build_slim,
    build_string,
    build_superstring,
    build_twobrane,
    check_linfty,
)
from supercocycle_kit.models.enums import AlgebraTag, Suite
from supercocycle_kit.models.linfty import LInftyReport

from .runner import Check, SuiteOptions, Witness, expect_equal


def _check(data: LInftyData, options: SuiteOptions, check_id: str) -> LInftyReport:
    return check_linfty(
        data,
        exhaustive_tuples=options.config.guards.exhaustive_tuples,
        seed=options.sampler(check_id).integer(0, 2**31),
    )


def _holds(build: Callable[[], LInftyData], options: SuiteOptions, check_id: str) -> Witness:
    data = build()
    report = _check(data, options, check_id)
    if not report.passed:
        first = report.failures[0]
        raise VerificationError(
            f"generalized Jacobi identity fails for {data.algebra.name}",
            counterexample=first.model_dump(mode="json"),
        )
    return {
        "n": data.n,
        "arities": report.arities,
        "tuples_checked": report.tuples_checked,
        "sampled": report.sampled,
        "nonzero_terms": report.nonzero_terms,
    }


def _perturbed(options: SuiteOptions, check_id: str) -> Witness:
    sampler = options.sampler(check_id)
    j = make_j(4)
    while True:
        noise = random_cochain(j.parent, 3, sampler, density=0.2)
        if not coboundary(noise).is_zero():
            break
    data = build_slim(j.parent, 2, j + noise)
    report = _check(data, options, check_id)
    expect_equal(
        report.failing_arities,
        [data.n + 2],
        "a non-closed top bracket must break exactly the arity n+2 identity",
    )
    return {"failing_arities": report.failing_arities, "failures": len(report.failures)}


def checks(options: SuiteOptions) -> list[Check]:
    specs: list[tuple[str, str, partial[Witness]]] = [
        (
            "heisenberg",
            "γ makes the Heisenberg algebra a Lie 2-algebra",
            partial(_holds, build_heisenberg_2algebra),
        ),
        (
            "perturbed",
            "a top bracket off the cocycle variety fails the Jacobi identity at arity n+2",
            partial(_perturbed),
        ),
    ]
    specs += [
        (
            f"string.so{n}",
            "j makes so(n) the string Lie 2-algebra",
            partial(_holds, partial(build_string, n)),
        )
        for n in (3, 4, 5)
    ]
    for k in options.ks:
        tag = AlgebraTag.from_dimension(k).value
        specs += [
            (
                f"superstring.{tag}",
                "superstring(k+1,1) is a Lie 2-superalgebra",
                partial(_holds, partial(build_superstring, k)),
            ),
            (
                f"twobrane.{tag}",
                "2-brane(k+2,1) is a Lie 3-superalgebra",
                partial(_holds, partial(build_twobrane, k)),
            ),
        ]
    result = []
    for name, anchor, fn in specs:
        check_id = f"linfty.{name}"
        result.append(Check(check_id, Suite.LINFTY, anchor, partial(fn, options, check_id)))
    return result
