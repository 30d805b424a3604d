"""
INSTRUCTION HEADER

What this file does (plain English):
- emit_csv(rows, path, mode, echo): writes sweep rows as CSV
    line 1    `# plan: {...}` (when an echo is given)
    line 2    header, the mode's CSV_COLUMNS
    then      one line per row; floats with 17 significant digits
  UTF-8, LF line endings, no index column, no quoting. Output bytes depend
  only on the rows and the echo.
- read_csv(path): reads it back (comment line skipped, floats round-trip
  exactly). read_plan(path): the echoed plan dict.

Where it runs: Imported by sweep/cli.py and tools/build/reproduce_figures.py.
Common failures + fixes:
  - PermissionError: the CSV is open in another program (e.g. Excel); close it.
"""

from __future__ import annotations

import io
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

import pandas as pd

from ..config.plan_echo import ECHO_PREFIX, parse_echo_line
from ..config.schema import CSV_COLUMNS
from .plan import SweepRow

FLOAT_FORMAT = "%.17g"


def rows_to_frame(rows: Sequence[SweepRow], mode: str) -> pd.DataFrame:
    columns = CSV_COLUMNS[mode]
    return pd.DataFrame([list(r.values) for r in rows], columns=columns)


def render_csv(rows: Sequence[SweepRow] | pd.DataFrame, mode: str, echo: str | None = None) -> str:
    frame = rows if isinstance(rows, pd.DataFrame) else rows_to_frame(rows, mode)
    buf = io.StringIO()
    if echo:
        buf.write(echo if echo.startswith(ECHO_PREFIX) else ECHO_PREFIX + echo)
        buf.write("\n")
    frame.to_csv(buf, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return buf.getvalue()


def emit_csv(
    rows: Sequence[SweepRow] | pd.DataFrame,
    path: Path | str | None,
    mode: str,
    echo: str | None = None,
) -> None:
    text = render_csv(rows, mode, echo)
    if path is None or str(path) in ("", "-"):
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(text.encode("utf-8"))


def read_csv(path: Path | str) -> pd.DataFrame:
    return pd.read_csv(path, comment="#", float_precision="round_trip")


def read_plan(path: Path | str) -> dict[str, Any]:
    with open(path, encoding="utf-8") as fh:
        first = fh.readline().rstrip("\n")
    return parse_echo_line(first)
