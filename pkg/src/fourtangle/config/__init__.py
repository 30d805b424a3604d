"""
INSTRUCTION HEADER

What this package does (plain English):
- Plan and CSV schema (schema.py), plan-file loading with precedence
  (load_plan.py) and the deterministic plan echo (plan_echo.py).

Where it runs: Imported only.
"""

from .load_plan import cast_value, load_plan_file, merge_plan, parse_plan_text, parse_quads
from .plan_echo import echo_line, parse_echo_line, plan_echo
from .schema import BACKENDS, CSV_COLUMNS, MEASURE_COLUMNS, MEASURE_SLACK, MODES, PLAN_KEYS

__all__ = [
    "BACKENDS",
    "CSV_COLUMNS",
    "MEASURE_COLUMNS",
    "MEASURE_SLACK",
    "MODES",
    "PLAN_KEYS",
    "cast_value",
    "echo_line",
    "load_plan_file",
    "merge_plan",
    "parse_echo_line",
    "parse_plan_text",
    "parse_quads",
    "plan_echo",
]
