"""Report writer.

Reports are written as sorted, indented JSON (byte-identical for a fixed seed
and configuration) or as a Markdown table for humans. Wall times only appear
when timings were requested.
"""

import logging
import sys
from pathlib import Path
from typing import IO, Any

import orjson

from supercocycle_kit.exceptions import SerializationError
from supercocycle_kit.models.enums import OutputFormat
from supercocycle_kit.models.report import CheckRecord, Report

logger = logging.getLogger(__name__)

_JSON_OPTIONS = orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2 | orjson.OPT_APPEND_NEWLINE


def render_json(report: Report, include_timings: bool = False) -> bytes:
    """Serialize a report as sorted, indented JSON."""
    exclude = None if include_timings else {"records": {"__all__": {"wall_time"}}}
    data = report.model_dump(mode="json", exclude=exclude)
    try:
        return orjson.dumps(data, option=_JSON_OPTIONS)
    except TypeError as e:
        raise SerializationError(f"report is not JSON serializable: {e}") from e


def _cell(value: Any) -> str:
    text = value if isinstance(value, str) else orjson.dumps(value).decode()
    return text.replace("|", "\\|").replace("\n", " ")


def _row(record: CheckRecord, include_timings: bool) -> str:
    evidence = record.witness if record.passed else (record.counterexample or {})
    cells = [
        f"`{record.check_id}`",
        record.status.value,
        _cell(record.anchor),
        _cell(record.message or evidence),
    ]
    if include_timings:
        cells.append("" if record.wall_time is None else f"{record.wall_time:.3f}")
    return "| " + " | ".join(cells) + " |"


def render_markdown(report: Report, include_timings: bool = False) -> str:
    """Render a report as a Markdown summary and table."""
    counts = report.counts()
    header = ["check", "status", "anchor", "evidence"]
    if include_timings:
        header.append("seconds")
    lines = [
        f"# {report.tool} {report.version}",
        "",
        f"seed `{report.seed}`, suites {', '.join(s.value for s in report.suites)}: "
        f"{counts['passed']} passed, {counts['failed']} failed, {counts['error']} errored",
        "",
        "| " + " | ".join(header) + " |",
        "|" + "---|" * len(header),
    ]
    lines += [_row(r, include_timings) for r in report.records]
    return "\n".join(lines) + "\n"


def write_document(data: dict[str, Any], file_path: str | Path | None = None) -> None:
    """Write a JSON document to ``file_path``, or to stdout when it is None."""
    payload = orjson.dumps(data, option=_JSON_OPTIONS)
    if file_path is None:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
        return
    path = Path(file_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(payload)
    logger.info(f"Wrote {path}")


class ReportWriter:
    """Report writer for a file or stdout.

    Example:
        >>> with ReportWriter("report.json") as writer:
        ...     writer.write(report)
    """

    def __init__(
        self,
        file_path: str | Path | None = None,
        output_format: OutputFormat = OutputFormat.JSON,
        include_timings: bool = False,
    ) -> None:
        """Initialize the writer.

        Args:
            file_path: Output file; stdout when None
            output_format: JSON or Markdown
            include_timings: Keep per-check wall times
        """
        self.file_path = Path(file_path) if file_path is not None else None
        self.output_format = output_format
        self.include_timings = include_timings
        self._file: IO[bytes] | None = None
        self._written = 0

    def __enter__(self) -> "ReportWriter":
        """Open the output for writing."""
        if self.file_path is None:
            self._file = sys.stdout.buffer
        else:
            self.file_path.parent.mkdir(parents=True, exist_ok=True)
            self._file = open(self.file_path, "wb")
        return self

    def __exit__(self, exc_type: Any, exc_val: Any, exc_tb: Any) -> None:
        """Close the output (stdout is only flushed)."""
        if self._file is None:
            return
        if self.file_path is None:
            self._file.flush()
        else:
            self._file.close()
        self._file = None

    def render(self, report: Report) -> bytes:
        if self.output_format is OutputFormat.MARKDOWN:
            return render_markdown(report, self.include_timings).encode("utf-8")
        return render_json(report, self.include_timings)

    def write(self, report: Report) -> None:
        """Write one report.

        Raises:
            SerializationError: If the writer was not opened
        """
        if self._file is None:
            raise SerializationError("Writer not opened - use context manager")
        self._file.write(self.render(report))
        self._written += 1
        target = self.file_path or "stdout"
        logger.debug(f"Wrote a {self.output_format.value} report to {target}")

    @property
    def reports_written(self) -> int:
        return self._written
