"""Rendering of result tables as aligned text, CSV or JSON.

One schema drives all three formats.  Exact integers can run to thousands
of digits, so JSON encodes any column marked bigint as a decimal string;
rationals render as "num/den" and reals with 12 significant digits
everywhere.  Given the same inputs the rendered bytes are identical from
run to run.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

# Exact cells outgrow the interpreter's default int-to-decimal guard
# (4300 digits on 3.11+ and patched 3.10) long before they outgrow memory.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

KINDS = ("int", "bigint", "fraction", "real", "str")


@dataclass(frozen=True)
class Column:
    name: str
    kind: str = "str"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown column kind {self.kind!r}")


@dataclass(frozen=True)
class Report:
    columns: tuple[Column, ...]
    rows: tuple[tuple, ...]
    meta: tuple[tuple[str, str], ...] = field(default=())


def fmt_real(x: float) -> str:
    return f"{float(x):.12g}"


def fmt_fraction(fr: Fraction) -> str:
    return f"{fr.numerator}/{fr.denominator}"


def _cell_text(value, kind: str) -> str:
    if value is None:
        return "-"
    if kind == "real":
        return fmt_real(value)
    if kind == "fraction":
        return fmt_fraction(value)
    return str(value)


def _cell_json(value, kind: str):
    if value is None:
        return None
    if kind == "int":
        return int(value)
    if kind == "bigint":
        return str(value)
    if kind == "fraction":
        return fmt_fraction(value)
    if kind == "real":
        return float(fmt_real(value))
    return str(value)


def to_table(report: Report) -> str:
    header = [c.name for c in report.columns]
    body = [
        [_cell_text(v, c.kind) for v, c in zip(row, report.columns)]
        for row in report.rows
    ]
    widths = [
        max(len(header[k]), *(len(r[k]) for r in body)) if body else len(header[k])
        for k in range(len(header))
    ]
    lines = [f"{key}: {val}" for key, val in report.meta]
    if lines:
        lines.append("")
    lines.append("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    lines.append("  ".join("-" * w for w in widths))
    for r in body:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def to_csv(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([c.name for c in report.columns])
    for row in report.rows:
        writer.writerow([_cell_text(v, c.kind) for v, c in zip(row, report.columns)])
    return buf.getvalue()


def to_json(report: Report) -> str:
    doc = {
        "meta": {key: val for key, val in report.meta},
        "rows": [
            {c.name: _cell_json(v, c.kind) for v, c in zip(row, report.columns)}
            for row in report.rows
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def render(report: Report, fmt: str) -> str:
    if fmt == "table":
        return to_table(report)
    if fmt == "csv":
        return to_csv(report)
    if fmt == "json":
        return to_json(report)
    raise ValueError(f"unknown format {fmt!r}")
