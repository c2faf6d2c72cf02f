"""CSV codec for plot-ready tables of report rows."""

import csv
import io
import math
from typing import Any

from pydantic import BaseModel

from ..constants import OutputFormat
from ..models import Report
from .base import Codec

SIGNIFICANT_DIGITS = 6


def format_value(value: Any) -> str:
    if isinstance(value, bool) or value is None:
        return "" if value is None else str(value).lower()
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return f"{value:.{SIGNIFICANT_DIGITS}g}"
    if isinstance(value, list | tuple):
        return ";".join(format_value(v) for v in value)
    return str(value)


def report_rows(data: Report | BaseModel | dict[str, Any] | list[dict[str, Any]]) -> list[dict[str, Any]]:
    """Rows of a report: its payload's ``rows`` list, or the scalar payload fields as one row."""
    if isinstance(data, Report):
        payload = data.payload
    elif isinstance(data, BaseModel):
        payload = data.model_dump()
    elif isinstance(data, list):
        return data
    else:
        payload = data
    if isinstance(payload.get("rows"), list):
        return list(payload["rows"])
    return [{k: v for k, v in payload.items() if not isinstance(v, dict)}]


class CSVCodec(Codec):
    """One row per record, header from the union of keys in first-seen order."""

    format = OutputFormat.CSV

    def encode(self, data: Any) -> bytes:
        rows = report_rows(data)
        header: list[str] = []
        for row in rows:
            header += [k for k in row if k not in header]
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=header, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: format_value(row.get(k)) for k in header})
        return buffer.getvalue().encode("utf-8")

    def decode(self, data: bytes) -> list[dict[str, str]]:
        """Rows as string dictionaries; values keep their printed precision."""
        return list(csv.DictReader(io.StringIO(data.decode("utf-8"))))
