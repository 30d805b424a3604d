"""
INSTRUCTION HEADER

What this file does (plain English):
- Reads plain-text sweep plan files:
      # comment
      mode = chain-c4
      gamma = 0.5
      quads = 1,1,1; 1,2,1
  one `key = value` per line, UTF-8, blank lines and `#` comments ignored.
- Casts every value with the type PLAN_KEYS declares for its key.
- merge_plan applies the precedence
      PLAN_KEYS defaults  <  plan file  <  command-line flags

Where it runs: Imported by sweep/cli.py and the tools.
Inputs:  a plan file path (optional) and a dict of flag overrides.
Outputs: a complete dict key -> typed value, in PLAN_KEYS order.
Common failures + fixes:
  - ValueError "unknown key": check spelling against config/schema.py
    (tools/admin/make_plan_file.py writes a template with every key).
  - ValueError "cannot read ... as float": fix the value on the named line.
  - FileNotFoundError: the plan path is wrong.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any

from .schema import PLAN_KEYS

_TRUE = {"1", "true", "yes", "y", "on"}
_FALSE = {"0", "false", "no", "n", "off"}


def parse_quads(text: Any) -> tuple[tuple[int, int, int], ...]:
    """'1,1,1; 1,2,1' -> ((1, 1, 1), (1, 2, 1))."""
    if isinstance(text, (list, tuple)):
        items = [tuple(int(v) for v in q) for q in text]
    else:
        items = []
        for chunk in str(text).split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            parts = [p.strip() for p in chunk.split(",")]
            if len(parts) != 3:
                raise ValueError(f"A quad needs three distances like '1,2,1', got {chunk!r}.")
            items.append(tuple(int(p) for p in parts))
    if not items:
        raise ValueError("At least one quad is required.")
    for q in items:
        if len(q) != 3 or any(v < 1 for v in q):
            raise ValueError(f"Quad distances must be three positive integers, got {q}.")
    return tuple(items)  # type: ignore[return-value]


def cast_value(key: str, raw: Any) -> Any:
    if key not in PLAN_KEYS:
        raise ValueError(f"Unknown plan key {key!r}.")
    kind = PLAN_KEYS[key].kind
    try:
        if kind == "str":
            return str(raw).strip()
        if kind == "float":
            return float(raw)
        if kind == "int":
            value = float(raw)
            if value != int(value):
                raise ValueError
            return int(value)
        if kind == "bool":
            if isinstance(raw, bool):
                return raw
            text = str(raw).strip().lower()
            if text in _TRUE:
                return True
            if text in _FALSE:
                return False
            raise ValueError
        if kind == "quads":
            return parse_quads(raw)
    except ValueError as exc:
        detail = f": {exc}" if str(exc) else ""
        raise ValueError(f"Cannot read {raw!r} as {kind} for plan key {key!r}{detail}") from None
    raise ValueError(f"Plan key {key!r} has unsupported type {kind!r} in PLAN_KEYS.")


def parse_plan_text(text: str, source: str = "<plan>") -> dict[str, Any]:
    out: dict[str, Any] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{source}:{lineno}: expected 'key = value', got {raw.strip()!r}.")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in PLAN_KEYS:
            raise ValueError(f"{source}:{lineno}: unknown key {key!r}.")
        try:
            out[key] = cast_value(key, value)
        except ValueError as exc:
            raise ValueError(f"{source}:{lineno}: {exc}") from None
    return out


def load_plan_file(path: Path | str) -> dict[str, Any]:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Plan file not found: {path}")
    return parse_plan_text(path.read_text(encoding="utf-8"), source=str(path))


def merge_plan(
    file_values: dict[str, Any] | None = None,
    overrides: dict[str, Any] | None = None,
) -> dict[str, Any]:
    merged = {key: spec.default for key, spec in PLAN_KEYS.items()}
    for layer in (file_values or {}, overrides or {}):
        for key, value in layer.items():
            if value is None:
                continue
            merged[key] = cast_value(key, value)
    return merged
