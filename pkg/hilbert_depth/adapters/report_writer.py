from __future__ import annotations

import csv
import io
import json
from typing import Any
from typing import Dict
from typing import List
from typing import Sequence

from pydantic import BaseModel

from hilbert_depth.entities.output_format import OutputFormat
from hilbert_depth.use_cases.interface.report_writer_interface import ReportWriterInterface


def _flatten(value: Any) -> str:
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value, separators=(",", ":"))
    if isinstance(value, bool):
        return str(value).lower()
    return str(value)


class ReportWriter(ReportWriterInterface):
    """
    Renders reports for stdout.

    json: one document ``{"kind": title, "records": [...]}``; csv: a header row
    then one row per record; text: ``text_lines`` when given, else an aligned table.
    """

    def render(
        self,
        title: str,
        records: Sequence[BaseModel],
        output_format: OutputFormat,
        columns: Sequence[str] = (),
        text_lines: List[str] = None,
    ) -> str:
        dumped = [record.model_dump(mode="json") for record in records]
        if output_format == OutputFormat.JSON:
            return json.dumps({"kind": title, "records": dumped}, indent=2) + "\n"
        columns = list(columns) or (list(dumped[0]) if dumped else [])
        if output_format == OutputFormat.CSV:
            return self._csv(dumped, columns)
        if text_lines is not None:
            return "\n".join(text_lines) + "\n"
        return self._aligned(title, dumped, columns)

    @staticmethod
    def _csv(dumped: List[Dict[str, Any]], columns: List[str]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        for row in dumped:
            writer.writerow([_flatten(row.get(column, "")) for column in columns])
        return buffer.getvalue()

    @staticmethod
    def _aligned(title: str, dumped: List[Dict[str, Any]], columns: List[str]) -> str:
        cells = [[_flatten(row.get(column, "")) for column in columns] for row in dumped]
        widths = [max([len(column)] + [len(line[i]) for line in cells]) for i, column in enumerate(columns)]
        lines = [title, "  ".join(column.rjust(width) for column, width in zip(columns, widths))]
        lines.extend("  ".join(cell.rjust(width) for cell, width in zip(line, widths)) for line in cells)
        return "\n".join(lines) + "\n"
