"""Rendering of report rows as markdown, CSV, or JSON.

All three formats carry the same field values; rationals are always printed
exactly as "a/b", never as floats.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

Value = int | bool | str | Fraction | None
Row = dict[str, Value]

FORMATS = ("md", "csv", "json")


def _text(value: Value) -> str:
    if value is None:
        return "n/a"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value)  # "a/b", or "a" when integral
    return str(value)


def _jsonable(value: Value):
    if isinstance(value, Fraction):
        return str(value)
    return value


def to_markdown(rows: list[Row]) -> str:
    if not rows:
        return "(no rows)\n"
    headers = list(rows[0])
    table = [[_text(r[h]) for h in headers] for r in rows]
    widths = [max(len(h), *(len(row[i]) for row in table))
              for i, h in enumerate(headers)]
    out = ["| " + " | ".join(h.ljust(w) for h, w in zip(headers, widths)) + " |",
           "| " + " | ".join("-" * w for w in widths) + " |"]
    for row in table:
        out.append("| " + " | ".join(v.ljust(w) for v, w in zip(row, widths)) + " |")
    return "\n".join(out) + "\n"


def to_csv(rows: list[Row]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if rows:
        headers = list(rows[0])
        writer.writerow(headers)
        for r in rows:
            writer.writerow([_text(r[h]) for h in headers])
    return buf.getvalue()


def to_json(command: str, params: Row, rows: list[Row]) -> str:
    payload = {
        "command": command,
        "params": {k: _jsonable(v) for k, v in params.items()},
        "rows": [{k: _jsonable(v) for k, v in r.items()} for r in rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def render(fmt: str, command: str, params: Row, rows: list[Row]) -> str:
    if fmt == "md":
        return to_markdown(rows)
    if fmt == "csv":
        return to_csv(rows)
    if fmt == "json":
        return to_json(command, params, rows)
    raise ValueError(f"unknown format {fmt!r}")
