"""CSV emission with fixed headers, LF endings and shortest round-trip floats."""

from __future__ import annotations

import csv
import io
import math
import sys
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import TextIO

Cell = float | int | str | bool | None

TAIL_HEADER = (
    "x",
    "side",
    "n",
    "beta",
    "trials",
    "hits",
    "p_hat",
    "ci_low",
    "ci_high",
    "reference_exact",
    "reference_asymptote",
    "in_window",
    "failures",
    "fit_c0",
)
EXACT_HEADER = (
    "r",
    "gue_count",
    "goe_count",
    "gue_shape",
    "goe_shape",
    "gue_fit_c",
    "goe_fit_c",
    "gue_window_c",
    "goe_window_c",
)
FLOW_HEADER = (
    "row",
    "t",
    "mean",
    "stderr",
    "count",
    "delta",
    "ci_low",
    "ci_high",
    "bound",
    "failures",
)
LOCAL_LAW_HEADER = (
    "sample",
    "entrywise_max",
    "trace_residual",
    "iso_e1e1",
    "iso_e1e2",
    "iso_uu",
    "bound",
    "psi",
    "rigidity_max",
    "rigidity_threshold",
    "rigidity_flagged",
    "sandwich_holds",
    "sandwich_lower_margin",
    "sandwich_upper_margin",
    "above_window",
)
TW_HEADER = (
    "x",
    "tw1",
    "tw2",
    "right_shape_1",
    "right_shape_2",
    "left_shape_1",
    "left_shape_2",
)


def format_cell(value: Cell) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return repr(value)
    return str(value)


def _write(handle: TextIO, header: Sequence[str], rows: Iterable[Sequence[Cell]]) -> None:
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        if len(row) != len(header):
            raise ValueError(f"row has {len(row)} cells, header has {len(header)}")
        writer.writerow([format_cell(v) for v in row])


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Cell]]) -> str:
    buffer = io.StringIO()
    _write(buffer, header, rows)
    return buffer.getvalue()


def emit_csv(
    header: Sequence[str], rows: Iterable[Sequence[Cell]], path: Path | str | None = None
) -> None:
    """Write to ``path``, or to stdout when no path is given."""
    if path is None:
        _write(sys.stdout, header, rows)
        return
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with target.open("w", encoding="utf-8", newline="") as handle:
        _write(handle, header, rows)
