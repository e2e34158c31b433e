"""Render ratio reports as CSV or a markdown table."""

from __future__ import annotations

import csv
import io
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction
from typing import Sequence

from .experiment import RatioReport

COLUMNS = ("instance", "variant", "algorithm", "alg_size", "opt_inc", "opt_off",
           "ratio_inc", "ratio_off", "n", "delta", "notes")

_QUANTUM = Decimal("0.001")


def format_ratio(value: Fraction | None) -> str:
    """Exact ratio rounded half-to-even to three decimals; ``None`` renders empty."""
    if value is None:
        return ""
    exact = Decimal(value.numerator) / Decimal(value.denominator)
    return str(exact.quantize(_QUANTUM, rounding=ROUND_HALF_EVEN))


def _cell(value: int | None) -> str:
    return "" if value is None else str(value)


def report_cells(row: RatioReport) -> list[str]:
    return [
        row.instance,
        row.variant.value,
        row.algorithm,
        _cell(row.alg_size),
        _cell(row.opt_inc),
        _cell(row.opt_off),
        format_ratio(row.ratio_inc),
        format_ratio(row.ratio_off),
        str(row.n),
        str(row.delta),
        ";".join(row.notes),
    ]


def emit_table(reports: Sequence[RatioReport], fmt: str = "csv") -> str:
    if not reports:
        raise ValueError("emit_table needs at least one report")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        for row in reports:
            writer.writerow(report_cells(row))
        return buf.getvalue()
    if fmt in ("md", "markdown"):
        lines = ["| " + " | ".join(COLUMNS) + " |", "|" + "---|" * len(COLUMNS)]
        for row in reports:
            cells = [c.replace("|", "\\|") for c in report_cells(row)]
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected csv|md")
