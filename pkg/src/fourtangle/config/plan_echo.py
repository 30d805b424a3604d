"""
INSTRUCTION HEADER

What this file does (plain English):
- Serializes a merged plan to one deterministic JSON line (orjson, sorted
  keys, no timestamps) for the `# plan: ...` comment at the top of every
  CSV, and reads it back.
- Keys that do not change the numbers (output path, worker count) are left
  out, so the same plan gives the same bytes wherever it is written.

Where it runs: Imported by sweep/csv_io.py and sweep/runner.py.
"""

from __future__ import annotations

from typing import Any

import orjson

ECHO_PREFIX = "# plan: "
_NOT_ECHOED = frozenset({"output", "workers"})


def plan_echo(plan: dict[str, Any]) -> str:
    payload = {k: _jsonable(v) for k, v in plan.items() if k not in _NOT_ECHOED}
    return orjson.dumps(payload, option=orjson.OPT_SORT_KEYS).decode("utf-8")


def echo_line(plan: dict[str, Any]) -> str:
    return ECHO_PREFIX + plan_echo(plan)


def parse_echo_line(line: str) -> dict[str, Any]:
    if not line.startswith(ECHO_PREFIX):
        raise ValueError(f"Not a plan echo line: {line[:40]!r}")
    return orjson.loads(line[len(ECHO_PREFIX):])


def _jsonable(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value
