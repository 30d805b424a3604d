"""
INSTRUCTION HEADER

What this file does (plain English):
- Defines PLAN_KEYS: every key a sweep plan may set, in file order, with its
  value type, default and one-line help. Plan files, CLI flags and the
  template writer (tools/admin/make_plan_file.py) are all generated from it.
- Defines CSV_COLUMNS: for every sweep mode, the ordered list of CSV columns.
- Defines MEASURE_COLUMNS: columns that hold entanglement measures and must
  lie in [0, 1] (within MEASURE_SLACK).
- This is the single source of truth for the plan and CSV schema. When a key
  or column is added, update it here first.

Where it runs: Imported only. Never run directly as a script.
"""

from __future__ import annotations

import math
from typing import Any, NamedTuple


class PlanKey(NamedTuple):
    kind: str          # str | float | int | bool | quads
    default: Any
    help: str


MODES = ("mixture-rank2", "mixture-rank3", "chain-c4", "chain-residual", "validate")
BACKENDS = ("freefermion", "ed")

PLAN_KEYS: dict[str, PlanKey] = {
    "mode": PlanKey("str", "chain-c4", "one of: " + ", ".join(MODES)),
    # mixtures
    "family": PlanKey("str", "ghz-w", "mixture family name (see mixtures.FAMILIES)"),
    "phi": PlanKey("float", math.pi / 2, "phase for families built on PhiPlusPhase"),
    "p_start": PlanKey("float", 0.0, "first p grid value"),
    "p_stop": PlanKey("float", 1.0, "last p grid value (inclusive)"),
    "p_step": PlanKey("float", 0.005, "p grid step"),
    "q_start": PlanKey("float", 0.0, "first q grid value (rank-3 only)"),
    "q_stop": PlanKey("float", 1.0, "last q grid value (inclusive)"),
    "q_step": PlanKey("float", 0.005, "q grid step"),
    # chain
    "lambda_start": PlanKey("float", 0.0, "first coupling lambda"),
    "lambda_stop": PlanKey("float", 2.0, "last coupling lambda (inclusive)"),
    "lambda_step": PlanKey("float", 0.005, "lambda grid step"),
    "gamma": PlanKey("float", 1.0, "anisotropy gamma in [0, 1]; 1 is Ising"),
    "quads": PlanKey("quads", ((1, 1, 1),), "site distances n1,n2,n3; several separated by ';'"),
    "backend": PlanKey("str", "freefermion", "one of: " + ", ".join(BACKENDS)),
    "n_sites": PlanKey("int", 1000, "chain length N"),
    "max_distance": PlanKey("int", 50, "largest pair distance summed in residual mode"),
    "oracle_sites": PlanKey("int", 10, "chain length of the exact-diagonalization cross-check and of validate runs"),
    # execution
    "workers": PlanKey("int", 1, "parallel worker processes (1 = serial)"),
    "use_cache": PlanKey("bool", True, "reuse correlator tables across quads"),
    "convergence_check": PlanKey("bool", True, "compare sampled points against a 2N chain"),
    "convergence_samples": PlanKey("int", 3, "grid points sampled by the convergence check"),
    "oracle_check": PlanKey("bool", True, "cross-validate backends before a chain sweep"),
    "output": PlanKey("str", "", "CSV output path (empty: stdout)"),
}

_PAIR_PRODUCTS = ["c2_12_c2_34", "c2_13_c2_24", "c2_14_c2_23"]

CSV_COLUMNS: dict[str, list[str]] = {
    "mixture-rank2": ["p", "c4", *_PAIR_PRODUCTS],
    "mixture-rank3": ["p", "q", "c4", *_PAIR_PRODUCTS],
    "chain-c4": [
        "lambda",
        "gamma",
        "n1",
        "n2",
        "n3",
        "N",
        "c4",
        "c2_first",
        "c2_last",
        "bound",
        "bound_gap",
    ],
    "chain-residual": ["lambda", "gamma", "N", "tau1", "sum_c2sq", "residual", "d_max"],
    "validate": ["lambda", "gamma", "N", "n1", "n2", "n3", "max_deviation"],
}

MEASURE_COLUMNS = frozenset(
    ["c4", *_PAIR_PRODUCTS, "c2_first", "c2_last", "bound", "tau1", "sum_c2sq"]
)
MEASURE_SLACK = 1e-9
