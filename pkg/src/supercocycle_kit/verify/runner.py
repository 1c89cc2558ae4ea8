"""Running verification checks on a worker pool and collecting a report.

A check is a named callable returning a witness dictionary. It fails by
raising :class:`VerificationError` (recorded with its counterexample) and
errors out by raising anything else; unexpected exceptions are logged
with their traceback. Each check draws its samples from a sampler salted
with its own id, so the report does not depend on the number of workers or
the order in which checks finish.
"""

import logging
import time
from collections.abc import Callable, Iterable, Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Any, ClassVar

from supercocycle_kit.__version__ import __version__
from supercocycle_kit.exceptions import SupercocycleError, UsageError, VerificationError
from supercocycle_kit.models.config import KitConfig
from supercocycle_kit.models.enums import CheckStatus, Suite
from supercocycle_kit.models.report import CheckRecord, Report
from supercocycle_kit.protocols import is_zero
from supercocycle_kit.utils.rationals import format_rational
from supercocycle_kit.utils.sampling import RationalSampler

logger = logging.getLogger(__name__)

Witness = dict[str, Any]


@dataclass(frozen=True)
class Check:
    """One verification check.

    Attributes:
        check_id: Stable identifier, also the sampler salt
        suite: Owning suite
        anchor: The statement being reproduced
        run: Callable returning a witness dictionary
    """

    check_id: str
    suite: Suite
    anchor: str
    run: Callable[[], Witness]


DEFAULT_SAMPLES = 20

# Sample counts per kind of check when the config sets no override
SAMPLE_COUNTS: Mapping[str, int] = MappingProxyType(
    {
        "division": 500,
        "spinor.three_psi": 200,
        "spinor.four_psi": 100,
        "cohomology.d_squared": 50,
        "integration.heisenberg": 100,
    }
)


@dataclass(frozen=True)
class SuiteOptions:
    """Parameters shared by every check of a run.

    Attributes:
        config: Engine configuration (seed, samples, guards, workers)
        ks: Division algebra dimensions to check
        counts: Default sample count per kind of check
    """

    config: KitConfig
    ks: tuple[int, ...]
    counts: ClassVar[Mapping[str, int]] = SAMPLE_COUNTS

    @property
    def samples(self) -> int:
        return self.samples_for("")

    def samples_for(self, kind: str) -> int:
        """Sample count for a kind of check; ``sampling.samples`` overrides every kind."""
        override = self.config.sampling.samples
        if override is not None:
            return override
        return self.counts.get(kind, DEFAULT_SAMPLES)

    @property
    def grassmann(self) -> int:
        return self.config.sampling.grassmann_generators

    @property
    def seed(self) -> int:
        return self.config.sampling.seed

    @property
    def max_monomials(self) -> int:
        return self.config.guards.max_monomials

    def sampler(self, salt: str) -> RationalSampler:
        """Seeded sampler private to one check."""
        return RationalSampler.from_config(self.config.sampling, salt)


SuiteBuilder = Callable[[SuiteOptions], list[Check]]


def show(value: Any) -> Any:
    """Render a value for a witness or counterexample."""
    if isinstance(value, Fraction | int) and not isinstance(value, bool):
        return format_rational(value)
    if isinstance(value, list | tuple):
        return [show(v) for v in value]
    if isinstance(value, dict):
        return {str(k): show(v) for k, v in value.items()}
    return str(value)


def expect_zero(value: Any, message: str, **inputs: Any) -> None:
    """Raise VerificationError unless ``value`` vanishes.

    Raises:
        VerificationError: With ``inputs`` and the value as counterexample
    """
    if not is_zero(value):
        raise VerificationError(message, counterexample={**show(inputs), "value": show(value)})


def expect_equal(actual: Any, expected: Any, message: str, **inputs: Any) -> None:
    """Raise VerificationError unless ``actual == expected``."""
    if actual != expected:
        raise VerificationError(
            message,
            counterexample={**show(inputs), "actual": show(actual), "expected": show(expected)},
        )


def run_check(check: Check, include_timings: bool = False) -> CheckRecord:
    """Run a single check and turn its outcome into a record."""
    start = time.perf_counter()
    witness: Witness = {}
    counterexample: dict[str, Any] | None = None
    message: str | None = None
    try:
        witness = show(check.run())
        status = CheckStatus.PASSED
    except VerificationError as e:
        status = CheckStatus.FAILED
        counterexample = e.counterexample
        message = e.message
        logger.warning(f"{check.check_id} failed: {e.message}")
    except SupercocycleError as e:
        status = CheckStatus.ERROR
        message = str(e)
        logger.error(f"{check.check_id} errored: {e}")
    except Exception as e:
        status = CheckStatus.ERROR
        message = f"{type(e).__name__}: {e}"
        logger.exception(f"{check.check_id} crashed")
    elapsed = time.perf_counter() - start
    logger.debug(f"{check.check_id}: {status.value} in {elapsed:.2f}s")
    return CheckRecord(
        check_id=check.check_id,
        suite=check.suite,
        anchor=check.anchor,
        status=status,
        witness=witness,
        counterexample=counterexample,
        message=message,
        wall_time=round(elapsed, 3) if include_timings else None,
    )


def run_checks(
    checks: Sequence[Check], workers: int = 1, include_timings: bool = False
) -> list[CheckRecord]:
    """Run checks, in parallel when ``workers > 1``; records come back sorted by id."""
    ids = [c.check_id for c in checks]
    duplicates = sorted({i for i in ids if ids.count(i) > 1})
    if duplicates:
        raise UsageError("duplicate check ids", details={"ids": duplicates})
    if workers <= 1:
        records = [run_check(c, include_timings) for c in checks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda c: run_check(c, include_timings), checks))
    return sorted(records, key=lambda r: r.check_id)


def _builders() -> dict[Suite, SuiteBuilder]:
    from . import cohomology, division, integration, linfty, spinor, supergroups

    return {
        Suite.DIVISION: division.checks,
        Suite.SPINOR: spinor.checks,
        Suite.COHOMOLOGY: cohomology.checks,
        Suite.LINFTY: linfty.checks,
        Suite.INTEGRATION: integration.checks,
        Suite.SUPER: supergroups.checks,
    }


def collect_checks(suites: Iterable[Suite], options: SuiteOptions) -> list[Check]:
    """All checks of the requested suites."""
    builders = _builders()
    checks: list[Check] = []
    for suite in suites:
        checks.extend(builders[suite](options))
    return checks


def run_suites(
    suites: Sequence[Suite],
    config: KitConfig,
    ks: Sequence[int] | None = None,
) -> Report:
    """Run whole suites and assemble the report.

    Args:
        suites: Suites to run
        config: Engine configuration; ``workers`` sizes the pool
        ks: Division algebra dimensions; defaults to ``config.division_dimensions``

    Returns:
        Report with records sorted by check id

    Raises:
        UsageError: If a k is not 1, 2, 4 or 8
    """
    dims = tuple(sorted(set(ks))) if ks else tuple(config.division_dimensions)
    bad = [k for k in dims if k not in (1, 2, 4, 8)]
    if bad:
        raise UsageError(f"k must be 1, 2, 4 or 8, got {bad}")
    options = SuiteOptions(config, dims)
    checks = collect_checks(suites, options)
    logger.info(
        f"Running {len(checks)} checks from {', '.join(s.value for s in suites)} "
        f"on {config.workers} worker(s)"
    )
    records = run_checks(checks, config.workers, config.include_timings)
    report = Report(
        version=__version__,
        seed=config.sampling.seed,
        suites=list(suites),
        records=records,
    )
    counts = report.counts()
    logger.info(
        f"{counts['passed']} passed, {counts['failed']} failed, {counts['error']} errored"
    )
    return report
