"""Tests for the check runner and report assembly."""

import logging
from fractions import Fraction

import pytest

from supercocycle_kit import ConfigFactory
from supercocycle_kit.exceptions import CochainError, UsageError, VerificationError
from supercocycle_kit.export import render_json
from supercocycle_kit.models.enums import CheckStatus, Suite
from supercocycle_kit.verify import (
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


def make_check(check_id, fn, suite=Suite.DIVISION):
    return Check(check_id, suite, f"anchor of {check_id}", fn)


def passing():
    return {"value": Fraction(1, 2), "count": 3}


def failing():
    raise VerificationError("identity fails", counterexample={"x": "1"})


def erroring():
    raise CochainError("bad level")


class TestExpectations:
    """Test expect_zero and expect_equal."""

    def test_expect_zero(self):
        """Test that nonzero values raise with the value as counterexample."""
        expect_zero(Fraction(0), "never raised")
        with pytest.raises(VerificationError) as exc_info:
            expect_zero(Fraction(3, 4), "nonzero", x=Fraction(1, 2))
        assert exc_info.value.counterexample == {"x": "1/2", "value": "3/4"}

    def test_expect_equal(self):
        """Test that unequal values raise with both sides recorded."""
        expect_equal([1, 2], [1, 2], "never raised")
        with pytest.raises(VerificationError) as exc_info:
            expect_equal(1, 2, "unequal")
        assert exc_info.value.counterexample == {"actual": "1", "expected": "2"}


class TestRunCheck:
    """Test turning check outcomes into records."""

    def test_passed(self):
        """Test that witnesses are rendered with rational strings."""
        record = run_check(make_check("a.pass", passing))
        assert record.status is CheckStatus.PASSED
        assert record.witness == {"value": "1/2", "count": "3"}
        assert record.counterexample is None
        assert record.wall_time is None

    def test_failed(self):
        """Test that VerificationError maps to FAILED with its counterexample."""
        record = run_check(make_check("a.fail", failing))
        assert record.status is CheckStatus.FAILED
        assert record.counterexample == {"x": "1"}
        assert record.message == "identity fails"

    def test_errored(self):
        """Test that other kit errors map to ERROR."""
        record = run_check(make_check("a.error", erroring))
        assert record.status is CheckStatus.ERROR
        assert record.message == "bad level"
        assert record.counterexample is None

    def test_unexpected_exception_is_an_error(self, caplog):
        """Test that a crash outside the kit's errors is recorded as ERROR with its traceback."""

        def crashing():
            raise RuntimeError("boom")

        with caplog.at_level(logging.ERROR, logger="supercocycle_kit.verify.runner"):
            record = run_check(make_check("a.crash", crashing))
        assert record.status is CheckStatus.ERROR
        assert record.message == "RuntimeError: boom"
        assert any(r.exc_info and "a.crash" in r.getMessage() for r in caplog.records)

    def test_timings(self):
        """Test that wall times are only kept on request."""
        record = run_check(make_check("a.pass", passing), include_timings=True)
        assert record.wall_time is not None
        assert record.wall_time >= 0


class TestRunChecks:
    """Test running several checks."""

    def test_sorted_by_id(self):
        """Test that records come back sorted regardless of input order."""
        checks = [make_check("b", passing), make_check("a", failing), make_check("c", erroring)]
        records = run_checks(checks)
        assert [r.check_id for r in records] == ["a", "b", "c"]

    def test_duplicate_ids(self):
        """Test that duplicate ids are rejected before anything runs."""
        with pytest.raises(UsageError) as exc_info:
            run_checks([make_check("a", passing), make_check("a", failing)])
        assert exc_info.value.details["ids"] == ["a"]

    def test_workers_do_not_change_the_records(self):
        """Test that a pool of workers gives the same records as one thread."""
        checks = [make_check(f"check.{i}", passing) for i in range(6)]
        checks.append(make_check("check.fail", failing))
        assert run_checks(checks, workers=1) == run_checks(checks, workers=3)


class TestSuites:
    """Test collecting and running whole suites."""

    def test_collect_division(self, kit_config):
        """Test the division suite ids for k = 1."""
        options = SuiteOptions(kit_config, (1,))
        ids = [c.check_id for c in collect_checks([Suite.DIVISION], options)]
        assert "division.alternative.R" in ids
        assert all(i.startswith("division.") for i in ids)
        assert len(ids) == len(set(ids))

    def test_sampler_is_salted_by_id(self, kit_config):
        """Test that two checks draw from different streams."""
        options = SuiteOptions(kit_config, (1,))
        first = options.sampler("a").rationals(5)
        assert first == options.sampler("a").rationals(5)
        assert first != options.sampler("b").rationals(8)[:5]

    def test_options_follow_the_config(self, kit_config):
        """Test the shortcuts on SuiteOptions."""
        options = SuiteOptions(kit_config, (1,))
        assert options.samples == 3
        assert options.samples_for("division") == 3
        assert options.seed == 7
        assert options.max_monomials == kit_config.guards.max_monomials

    def test_default_sample_counts(self):
        """Test the per-check counts used when no override is configured."""
        options = SuiteOptions(ConfigFactory.create(seed=7, division_dimensions=[1]), (1,))
        assert options.samples_for("division") == 500
        assert options.samples_for("spinor.three_psi") == 200
        assert options.samples_for("spinor.four_psi") == 100
        assert options.samples_for("cohomology.d_squared") == 50
        assert options.samples_for("integration.heisenberg") == 100
        assert options.samples == DEFAULT_SAMPLES
        assert SAMPLE_COUNTS["division"] == 500

    def test_division_defaults_reach_the_report(self):
        """Test that a run without an override checks 500 tuples per division check."""
        config = ConfigFactory.create(seed=7, division_dimensions=[1])
        report = run_suites([Suite.DIVISION], config)
        record = next(r for r in report.records if r.check_id == "division.alternative.R")
        assert record.witness["samples"] == "500"

    def test_bad_k(self, kit_config):
        """Test that k outside 1, 2, 4, 8 is a usage error."""
        with pytest.raises(UsageError):
            run_suites([Suite.DIVISION], kit_config, ks=[3])

    def test_division_report(self, kit_config):
        """Test a passing division run and its counts."""
        report = run_suites([Suite.DIVISION], kit_config)
        assert report.passed
        assert report.seed == 7
        assert report.counts()["passed"] == len(report.records)
        assert report.failures() == []

    def test_reports_are_byte_identical_across_workers(self, kit_config):
        """Test that one and two workers serialize to the same bytes."""
        suites = [Suite.DIVISION, Suite.SPINOR]
        single = run_suites(suites, kit_config)
        pooled = run_suites(suites, kit_config.model_copy(update={"workers": 2}))
        assert render_json(single) == render_json(pooled)

    @pytest.mark.slow
    @pytest.mark.parametrize("suite", list(Suite))
    def test_every_suite_passes(self, kit_config, suite):
        """Test each suite for k = 1."""
        report = run_suites([suite], kit_config)
        assert report.passed, [r.check_id for r in report.failures()]
