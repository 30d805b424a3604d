"""
INSTRUCTION HEADER

What this package does (plain English):
- Sweep plans, the sweep runner with its gates, CSV output, the figure
  registry and the command-line front end.

Where it runs: Imported only (the CLI entry script is tools/run/fourtangle.py).
"""

from .cli import cli_main
from .csv_io import emit_csv, read_csv, read_plan, render_csv, rows_to_frame
from .figures import FIGURES, figure_plan
from .plan import Grid, SweepPlan, SweepRow
from .runner import run_sweep

__all__ = [
    "FIGURES",
    "Grid",
    "SweepPlan",
    "SweepRow",
    "cli_main",
    "emit_csv",
    "figure_plan",
    "read_csv",
    "read_plan",
    "render_csv",
    "rows_to_frame",
    "run_sweep",
]
