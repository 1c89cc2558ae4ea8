"""Checker for the generalized Jacobi identities of slim L∞ data.

At arity m the identity reads

    Σ_{i+j=m+1} Σ_{σ ∈ S(i, m−i)} χ(σ) (−1)^{i(j−1)}
        l_j(l_i(x_σ(1), …, x_σ(i)), x_σ(i+1), …, x_σ(m)) = 0

with χ computed from overall grades. Each (i, j) term is kept separately
so reports can show which ones contribute.
"""

import logging
from collections.abc import Iterator
from fractions import Fraction
from math import comb

from supercocycle_kit.models.linfty import LInftyFailure, LInftyReport
from supercocycle_kit.utils.rationals import format_rational
from supercocycle_kit.utils.sampling import RationalSampler

from .slim import LInftyData, Vector
from .unshuffles import inner_unshuffles

logger = logging.getLogger(__name__)


def _add(target: Vector, source: Vector, factor: Fraction | int) -> None:
    for k, v in source.items():
        value = target.get(k, Fraction(0)) + v * factor
        if value:
            target[k] = value
        else:
            target.pop(k, None)


def slim_terms(n: int) -> frozenset[tuple[int, int]]:
    """The (i, j) terms that can be nonzero for slim Lie n-superalgebra data.

    l₁ vanishes and the top bracket lands in a central summand, so only
    l₂∘l₂ at arity 3 and l_{n+1}∘l₂, l₂∘l_{n+1} at arity n + 2 survive.
    """
    return frozenset({(2, 2), (2, n + 1), (n + 1, 2)})


def jacobi_terms(data: LInftyData, args: tuple[int, ...]) -> dict[tuple[int, int], Vector]:
    """Every nonzero (i, j) term of the arity-len(args) identity at a basis tuple."""
    m = len(args)
    grades = [data.grade(a) for a in args]
    terms: dict[tuple[int, int], Vector] = {}
    for i in range(1, m + 1):
        j = m + 1 - i
        total: Vector = {}
        for sigma in inner_unshuffles(i, m):
            inner = data.bracket(i, tuple(args[p] for p in sigma.head()))
            if not inner:
                continue
            sign = sigma.chi(grades) * (-1 if (i * (j - 1)) % 2 else 1)
            rest = tuple(args[p] for p in sigma.tail())
            for b, c in inner.items():
                _add(total, data.bracket(j, (b, *rest)), sign * c)
        if total:
            terms[(i, j)] = total
    return terms


def _exhaustive(dimension: int, m: int) -> Iterator[tuple[int, ...]]:
    def extend(prefix: tuple[int, ...], start: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == m:
            yield prefix
            return
        for nxt in range(start, dimension):
            yield from extend((*prefix, nxt), nxt)

    return extend((), 0)


def _sampled(data: LInftyData, m: int, count: int, seed: int) -> Iterator[tuple[int, ...]]:
    sampler = RationalSampler(seed + 7919 * m)
    g = data.algebra
    monos = sorted(data.cocycle.coeffs)
    pairs = sorted(pair for pair, _ in g.nonzero_brackets())
    for n in range(count):
        strategy = n % 3
        if strategy == 1 and monos and m == data.n + 2:
            # one argument of an ω term split into a bracket pair
            mono = list(sampler.choice(monos))
            pos = sampler.integer(0, len(mono) - 1)
            sources = g.sources(mono[pos])
            if sources:
                i, j, _ = sampler.choice(sources)
                yield tuple(sorted([*mono[:pos], *mono[pos + 1 :], i, j]))
                continue
        if strategy == 2 and pairs and m >= 2:
            a, b = sampler.choice(pairs)
            extra = [sampler.integer(0, data.dimension - 1) for _ in range(m - 2)]
            yield tuple(sorted([a, b, *extra]))
            continue
        yield tuple(sorted(sampler.integer(0, data.dimension - 1) for _ in range(m)))


def check_linfty(
    data: LInftyData,
    max_arity: int | None = None,
    *,
    exhaustive_tuples: int = 20_000,
    samples: int = 2_000,
    seed: int = 0,
) -> LInftyReport:
    """Evaluate the generalized Jacobi identities for arities 1 … max_arity.

    Arities whose basis tuples (up to order) number at most
    ``exhaustive_tuples`` are scanned completely; larger ones are checked on
    ``samples`` seeded tuples, a third of them built from the cocycle's
    support so that a failing dω is hit.

    Args:
        data: Slim L∞ data
        max_arity: Largest arity to check; defaults to n + 2, above which
            every term vanishes for slim data
        exhaustive_tuples: Budget for exhaustive scans
        samples: Tuples per sampled arity
        seed: Seed for sampled arities

    Returns:
        LInftyReport with failing tuples and the per-(i, j) breakdown
    """
    top = max_arity if max_arity is not None else data.n + 2
    report = LInftyReport(algebra=data.algebra.name, n=data.n)
    allowed = slim_terms(data.n)
    for m in range(1, top + 1):
        total = comb(data.dimension + m - 1, m)
        if total <= exhaustive_tuples:
            tuples: Iterator[tuple[int, ...]] = _exhaustive(data.dimension, m)
        else:
            logger.warning(
                f"Sampling {samples} of {total} arity-{m} tuples for {data.algebra.name}"
            )
            report.sampled = True
            tuples = _sampled(data, m, samples, seed)
        report.arities.append(m)
        for args in tuples:
            report.tuples_checked += 1
            terms = jacobi_terms(data, args)
            if not terms:
                continue
            combined: Vector = {}
            for (i, j), vector in terms.items():
                key = f"{m}:{i},{j}"
                report.nonzero_terms[key] = report.nonzero_terms.get(key, 0) + 1
                _add(combined, vector, 1)
            unexpected = sorted(ij for ij in terms if ij not in allowed)
            if unexpected:
                logger.warning(
                    f"{data.algebra.name}: terms {unexpected} are nonzero at "
                    f"{[data.label(a) for a in args]}"
                )
            if combined or unexpected:
                report.failures.append(
                    LInftyFailure(
                        arity=m,
                        labels=[data.label(a) for a in args],
                        contributions={
                            f"{i},{j}": _render(data, vector) for (i, j), vector in terms.items()
                        },
                        unexpected=[f"{i},{j}" for i, j in unexpected],
                    )
                )
    logger.info(
        f"L∞ check of {data.algebra.name} (n={data.n}): {report.tuples_checked} tuples, "
        f"{len(report.failures)} failures"
    )
    return report


def _render(data: LInftyData, vector: Vector) -> str:
    return " + ".join(
        f"{format_rational(c)}·{data.label(k)}" for k, c in sorted(vector.items())
    )
