"""Writing reports and computed cochains to files or stdout."""

from supercocycle_kit.export.writer import (
    ReportWriter,
    render_json,
    render_markdown,
    write_document,
)

__all__ = ["ReportWriter", "render_json", "render_markdown", "write_document"]
