"""
INSTRUCTION HEADER
What this file does: Command-line entry point for the fourtangle toolkit (measure, scan, residual, validate, factorizing).
Where it runs: Terminal [command line].
Inputs: Flags and an optional `--plan` file (see `tools/admin/make_plan_file.py`).
Outputs: Values on stdout; CSV to `--output` or stdout; status lines and progress bars on stderr.
How to run: `python tools/run/fourtangle.py scan --gamma 1 --quad 1,1,1 --output out/c4_111.csv`
What success looks like: Exit code 0; the CSV starts with a `# plan: {...}` line.
Common failures + fixes:
- Exit 2: bad flag or plan value; the message names the key.
- Exit 1: a numerical gate failed; rerun with `--verbose` and raise `--n-sites` if it is the convergence gate.
"""

from __future__ import annotations

import sys
from pathlib import Path


def _repo_root() -> Path:
    """Return the repository root folder based on this file location."""
    return Path(__file__).resolve().parents[2]


def main() -> int:
    sys.path.insert(0, str(_repo_root() / "src"))
    from fourtangle.sweep.cli import cli_main

    return cli_main(sys.argv[1:])


if __name__ == "__main__":
    raise SystemExit(main())
