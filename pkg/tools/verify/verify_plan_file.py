"""
INSTRUCTION HEADER
Purpose: Verify that a plan file parses and yields a valid sweep plan.
Inputs: A plan file path; schema in `src/fourtangle/config/schema.py`.
Outputs: None (prints the resolved plan echo, exits non-zero on failure).
How to run: `python tools/verify/verify_plan_file.py plans/template.txt`
Success looks like: `Plan verification passed.` followed by the number of grid points.
Common failures and fixes:
- Unknown key: regenerate a template with `python tools/admin/make_plan_file.py`.
- Rank mismatch: mixture-rank2 needs a rank-2 family, mixture-rank3 a rank-3 family.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path


def _repo_root() -> Path:
    """Return the repository root folder based on this file location."""
    return Path(__file__).resolve().parents[2]


def _parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(description="Verify a sweep plan file.")
    parser.add_argument("path", help="plan file to check")
    return parser.parse_args()


def main() -> int:
    """Parse, merge and validate the plan file."""
    args = _parse_args()
    sys.path.insert(0, str(_repo_root() / "src"))
    from fourtangle.config.load_plan import load_plan_file
    from fourtangle.config.plan_echo import echo_line
    from fourtangle.sweep.plan import SweepPlan
    from fourtangle.sweep.runner import build_tasks

    try:
        plan = SweepPlan.from_dict(load_plan_file(args.path))
    except (ValueError, FileNotFoundError) as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return 1

    print(echo_line(plan.as_dict()))
    print("Plan verification passed.")
    print(f"Grid points: {len(build_tasks(plan))} (mode {plan.mode})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
