"""
INSTRUCTION HEADER
Purpose: Write a plan-file template listing every sweep plan key with its default and help text.
Inputs: Reads PLAN_KEYS from `src/fourtangle/config/schema.py`; optional `--figure NAME` to prefill a figure's overrides.
Outputs: Writes `plans/template.txt` (or `--out PATH`).
How to run: `python tools/admin/make_plan_file.py --figure c4-112-gamma0.58 --out plans/fig_c4_112.txt`
Success looks like: console prints `Created plan file: ...`.
Common failures and fixes:
- File exists: pass `--force` to overwrite.
- Unknown figure: `python tools/build/reproduce_figures.py --list` shows the names.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path


def _repo_root() -> Path:
    """Return the repository root folder based on this file location."""
    return Path(__file__).resolve().parents[2]


def _parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(description="Write a sweep plan template.")
    parser.add_argument("--out", default=None, help="output path (default plans/template.txt)")
    parser.add_argument("--figure", default=None, help="prefill with a named figure's overrides")
    parser.add_argument("--force", action="store_true", help="overwrite an existing file")
    return parser.parse_args()


def _format_value(kind: str, value) -> str:
    if kind == "quads":
        return "; ".join(",".join(str(v) for v in q) for q in value)
    if kind == "bool":
        return "true" if value else "false"
    if kind == "float":
        return repr(float(value))
    return str(value)


def render_template(figure: str | None = None) -> str:
    sys.path.insert(0, str(_repo_root() / "src"))
    from fourtangle.config.load_plan import merge_plan
    from fourtangle.config.schema import PLAN_KEYS
    from fourtangle.sweep.figures import FIGURES

    overrides = {}
    if figure is not None:
        if figure not in FIGURES:
            raise ValueError(f"Unknown figure {figure!r}. Expected one of {', '.join(FIGURES)}.")
        overrides = FIGURES[figure].overrides
    values = merge_plan(None, overrides)

    lines = ["# fourtangle sweep plan", "# one `key = value` per line; flags on the command line override these."]
    if figure is not None:
        lines.append(f"# figure: {figure} ({FIGURES[figure].description})")
    for key, spec in PLAN_KEYS.items():
        lines.append("")
        lines.append(f"# {spec.help}")
        lines.append(f"{key} = {_format_value(spec.kind, values[key])}")
    return "\n".join(lines) + "\n"


def main() -> int:
    """Write the template and report where it went."""
    args = _parse_args()
    out = Path(args.out) if args.out else _repo_root() / "plans" / "template.txt"
    if out.exists() and not args.force:
        print(f"ERROR: {out} exists; pass --force to overwrite.", file=sys.stderr)
        return 1
    try:
        text = render_template(args.figure)
    except ValueError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return 2
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    print(f"Created plan file: {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
