"""
INSTRUCTION HEADER

What this file does (plain English):
- SweepPlan: a validated, immutable sweep description built from a merged
  plan dict (see config/load_plan.py). Grids are (start, stop, step)
  triples, inclusive of stop within step / 1e6.
- SweepRow: one output row; measure columns are checked to lie in [0, 1]
  within 1e-9 when the row is built.

Where it runs: Imported by sweep/runner.py, sweep/cli.py, sweep/figures.py.
Common failures + fixes:
  - ValueError "grid": step must be > 0 and stop >= start.
  - ValueError "family ... rank": mixture-rank2 needs a rank-2 family and
    mixture-rank3 a rank-3 family (see mixtures.FAMILIES).
  - NumericalError "outside [0, 1]": a measure left its range; the backend
    is inconsistent for that point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from ..chain.model import ED_MAX_SITES, SiteQuad
from ..config.load_plan import merge_plan
from ..config.schema import BACKENDS, CSV_COLUMNS, MEASURE_COLUMNS, MEASURE_SLACK, MODES
from ..mixtures import get_family
from ..numkernel import NumericalError

GRID_DECIMALS = 12


@dataclass(frozen=True)
class Grid:
    start: float
    stop: float
    step: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.start) and math.isfinite(self.stop) and math.isfinite(self.step)):
            raise ValueError(f"Grid bounds must be finite, got {self}.")
        if self.step <= 0.0:
            raise ValueError(f"Grid step must be > 0, got {self.step!r}.")
        if self.stop < self.start:
            raise ValueError(f"Grid stop {self.stop!r} is below start {self.start!r}.")

    def values(self) -> np.ndarray:
        count = int(math.floor((self.stop - self.start) / self.step + 1e-6)) + 1
        return np.round(self.start + self.step * np.arange(count), GRID_DECIMALS)


@dataclass(frozen=True)
class SweepPlan:
    mode: str
    gamma: float
    lambda_grid: Grid
    quads: tuple[SiteQuad, ...]
    backend: str
    n_sites: int
    family: str
    phi: float
    p_grid: Grid
    q_grid: Grid
    max_distance: int
    oracle_sites: int
    workers: int
    use_cache: bool
    convergence_check: bool
    convergence_samples: int
    oracle_check: bool
    output: str
    settings: tuple[tuple[str, Any], ...]

    @classmethod
    def from_dict(cls, values: dict[str, Any]) -> "SweepPlan":
        v = merge_plan(values)
        plan = cls(
            mode=v["mode"],
            gamma=v["gamma"],
            lambda_grid=Grid(v["lambda_start"], v["lambda_stop"], v["lambda_step"]),
            quads=tuple(SiteQuad(*q) for q in v["quads"]),
            backend=v["backend"],
            n_sites=v["n_sites"],
            family=v["family"],
            phi=v["phi"],
            p_grid=Grid(v["p_start"], v["p_stop"], v["p_step"]),
            q_grid=Grid(v["q_start"], v["q_stop"], v["q_step"]),
            max_distance=v["max_distance"],
            oracle_sites=v["oracle_sites"],
            workers=v["workers"],
            use_cache=v["use_cache"],
            convergence_check=v["convergence_check"],
            convergence_samples=v["convergence_samples"],
            oracle_check=v["oracle_check"],
            output=v["output"],
            settings=tuple(v.items()),
        )
        plan._validate()
        return plan

    def as_dict(self) -> dict[str, Any]:
        return dict(self.settings)

    @property
    def columns(self) -> list[str]:
        return CSV_COLUMNS[self.mode]

    @property
    def is_chain(self) -> bool:
        return self.mode in ("chain-c4", "chain-residual", "validate")

    @property
    def chain_sites(self) -> int:
        """Validate runs use the short oracle chain; every other chain mode uses N."""
        return self.oracle_sites if self.mode == "validate" else self.n_sites

    def _validate(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"Unknown mode {self.mode!r}. Expected one of {', '.join(MODES)}.")
        if self.backend not in BACKENDS:
            raise ValueError(f"Unknown backend {self.backend!r}. Expected one of {BACKENDS}.")
        if not 0.0 <= self.gamma <= 1.0:
            raise ValueError(f"gamma must lie in [0, 1], got {self.gamma!r}.")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}.")
        if self.mode.startswith("mixture"):
            family = get_family(self.family)
            rank = 2 if self.mode == "mixture-rank2" else 3
            if family.rank != rank:
                raise ValueError(
                    f"Family {self.family!r} has rank {family.rank}; mode {self.mode} needs rank {rank}."
                )
            for name, grid in (("p", self.p_grid), ("q", self.q_grid)):
                if grid.start < 0.0 or grid.stop > 1.0:
                    raise ValueError(f"{name} grid must lie in [0, 1], got {grid}.")
            return
        if self.lambda_grid.start < 0.0:
            raise ValueError(f"lambda grid must be >= 0, got start {self.lambda_grid.start!r}.")
        if self.chain_sites > ED_MAX_SITES and (self.mode == "validate" or self.backend == "ed"):
            raise ValueError(
                f"{self.mode} with exact diagonalization needs N <= {ED_MAX_SITES}, got N={self.chain_sites}."
            )
        if self.oracle_check and self.oracle_sites > ED_MAX_SITES:
            raise ValueError(f"oracle_sites must be <= {ED_MAX_SITES}, got {self.oracle_sites}.")
        for quad in self.quads:
            quad.centered_sites(self.chain_sites)
        if self.mode == "chain-residual" and self.max_distance < 1:
            raise ValueError(f"max_distance must be >= 1, got {self.max_distance}.")
        if self.convergence_samples < 1:
            raise ValueError(f"convergence_samples must be >= 1, got {self.convergence_samples}.")


@dataclass(frozen=True)
class SweepRow:
    mode: str
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        columns = CSV_COLUMNS[self.mode]
        if len(self.values) != len(columns):
            raise ValueError(f"{self.mode} rows need {len(columns)} values, got {len(self.values)}.")
        for name, value in zip(columns, self.values):
            if name in MEASURE_COLUMNS and not (-MEASURE_SLACK <= value <= 1.0 + MEASURE_SLACK):
                raise NumericalError(f"{name} = {value!r} lies outside [0, 1] ({self.as_dict()}).")

    def as_dict(self) -> dict[str, float]:
        return dict(zip(CSV_COLUMNS[self.mode], self.values))

    def __getitem__(self, column: str) -> float:
        return self.as_dict()[column]
