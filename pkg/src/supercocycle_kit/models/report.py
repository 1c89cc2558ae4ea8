"""Models for verification reports.

A report is a list of check records, one per identity that was tested.
Records carry a short anchor naming the result they reproduce, so a line in
the documentation can be traced to the check that backs it. All values are
strings or integers: rationals travel as ``"num/den"``.
"""

from typing import Any

from pydantic import BaseModel, Field, field_validator

from .enums import CheckStatus, Suite


class CheckRecord(BaseModel):
    """Outcome of one verification check.

    Attributes:
        check_id: Stable identifier such as ``"spinor.three_psi.O.plus"``
        suite: Suite the check belongs to
        anchor: The statement the check reproduces
        status: Passed, failed, or errored
        witness: Evidence for a pass (sample counts, computed values)
        counterexample: The failing input, when status is FAILED
        message: Error text, when status is not PASSED
        wall_time: Seconds spent, only kept when timings are requested
    """

    check_id: str = Field(..., description="Stable check identifier")
    suite: Suite = Field(..., description="Suite the check belongs to")
    anchor: str = Field(..., description="Statement the check reproduces")
    status: CheckStatus = Field(..., description="Outcome")
    witness: dict[str, Any] = Field(default_factory=dict, description="Evidence for a pass")
    counterexample: dict[str, Any] | None = Field(None, description="Failing input")
    message: str | None = Field(None, description="Failure or error message")
    wall_time: float | None = Field(None, description="Seconds spent (optional)")

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASSED


class Report(BaseModel):
    """A full verification run.

    Records are kept sorted by ``check_id`` so the order in which worker
    threads finish never shows up in the serialized report.

    Attributes:
        tool: Tool name
        version: Tool version
        seed: Sampling seed of the run
        suites: Suites that were run
        records: One record per check
    """

    tool: str = Field(default="supercocycle-kit")
    version: str = Field(..., description="Tool version")
    seed: int = Field(..., description="Sampling seed")
    suites: list[Suite] = Field(default_factory=list)
    records: list[CheckRecord] = Field(default_factory=list)

    @field_validator("records")
    @classmethod
    def sort_records(cls, v: list[CheckRecord]) -> list[CheckRecord]:
        """Order records by check id."""
        return sorted(v, key=lambda r: r.check_id)

    @property
    def passed(self) -> bool:
        """True when every record passed."""
        return all(r.passed for r in self.records)

    def counts(self) -> dict[str, int]:
        """Number of records per status."""
        result = {status.value: 0 for status in CheckStatus}
        for record in self.records:
            result[record.status.value] += 1
        return result

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]
