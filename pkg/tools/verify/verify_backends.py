"""
INSTRUCTION HEADER
Purpose: Cross-validate the free-fermion backend against exact diagonalization on a 10-site chain.
Inputs: None (fixed grid of (lambda, gamma) points and quads (1,1,1), (1,2,1), (2,1,2)).
Outputs: One line per point with the largest |ED - free fermion| over all 256 Pauli strings; exits non-zero on failure.
How to run: `python tools/verify/verify_backends.py`  (add `--n 12` for a longer chain)
Success looks like: `Backend verification passed (max deviation ...).`
Common failures and fixes:
- Deviation above 1e-8: the Majorana sign conventions or the parity choice changed; run tests/test_chain.py.
- Slow: N above 12 builds a 2^N state per point; keep N <= 12 for routine checks.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

LAMBDAS = (0.0, 0.3, 0.8, 1.0, 1.2, 1.9)
GAMMAS = (1.0, 0.5)
QUADS = ("1,1,1", "1,2,1", "2,1,2")
TOL = 1e-8


def _repo_root() -> Path:
    """Return the repository root folder based on this file location."""
    return Path(__file__).resolve().parents[2]


def _parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(description="Cross-validate the chain backends.")
    parser.add_argument("--n", type=int, default=10, help="chain length (<= 14)")
    return parser.parse_args()


def main() -> int:
    args = _parse_args()
    sys.path.insert(0, str(_repo_root() / "src"))
    from fourtangle.chain import ChainConfig, SiteQuad, cross_validate

    worst = 0.0
    failed = False
    for gamma in GAMMAS:
        for lam in LAMBDAS:
            cfg = ChainConfig(lam, gamma, args.n, backend="ed")
            devs = [cross_validate(cfg, SiteQuad.parse(q)) for q in QUADS]
            flag = "" if max(devs) <= TOL else "  <-- FAIL"
            failed = failed or bool(flag)
            worst = max(worst, *devs)
            print(
                f"lambda={lam:<4g} gamma={gamma:<4g} "
                + "  ".join(f"({q}) {d:.2e}" for q, d in zip(QUADS, devs))
                + flag,
                flush=True,
            )

    if failed:
        print(f"ERROR: backends differ by more than {TOL:g}.", file=sys.stderr)
        return 1
    print(f"Backend verification passed (max deviation {worst:.2e}).")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
