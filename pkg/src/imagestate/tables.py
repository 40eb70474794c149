"""CSV / JSON rendering of result tables.

Floats are rounded once, to ``precision`` significant digits, and both
formats are produced from the same rounded values.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Iterable, Mapping, Sequence

__all__ = ["format_value", "render", "FORMATS"]

FORMATS = ("csv", "json")


def format_value(value: Any, precision: int = 10) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.{precision - 1}e}"
    return str(value)


def _json_value(value: Any, precision: int) -> Any:
    if isinstance(value, float):
        return float(format_value(value, precision))
    return value


def render(records: Iterable[Mapping[str, Any]], columns: Sequence[str], kind: str = "csv",
           precision: int = 10) -> str:
    if precision < 1:
        raise ValueError("precision must be >= 1")
    records = list(records)
    if kind == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for rec in records:
            writer.writerow([format_value(rec[c], precision) for c in columns])
        return buf.getvalue()
    if kind == "json":
        rows = [{c: _json_value(rec[c], precision) for c in columns} for rec in records]
        return json.dumps(rows, indent=2) + "\n"
    raise ValueError(f"unknown output format {kind!r}; expected one of {FORMATS}")
