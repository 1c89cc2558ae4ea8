"""Verification suites and the runner that turns them into reports."""

from .runner import (
    DEFAULT_SAMPLES,
    SAMPLE_COUNTS,
    Check,
    SuiteOptions,
    collect_checks,
    expect_equal,
    expect_zero,
    run_check,
    run_checks,
    run_suites,
)

__all__ = [
    "DEFAULT_SAMPLES",
    "SAMPLE_COUNTS",
    "Check",
    "SuiteOptions",
    "collect_checks",
    "run_check",
    "run_checks",
    "run_suites",
    "expect_zero",
    "expect_equal",
]
