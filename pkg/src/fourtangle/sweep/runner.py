"""
INSTRUCTION HEADER

What this file does (plain English):
- run_sweep(plan): evaluates every grid point of a SweepPlan and returns
  SweepRows in grid order.
    mixture-rank2   one row per p
    mixture-rank3   one row per (p, q), p-major
    chain-c4        one row per (lambda, quad); quads share one correlator
                    table per lambda
    chain-residual  one row per lambda: tau_1 of the central site, the sum
                    of C2^2 over partners on both sides, their difference
    validate        one row per (lambda, quad): max |ED - free fermion|
- Gates for free-fermion chain sweeps:
    oracle gate       cross_validate on a short chain at the grid's
                      min / mid / max lambda before anything runs
    convergence gate  re-evaluates a few sampled lambdas on a 2N chain;
                      a measure moving by more than 1e-6 aborts the sweep.
                      Samples avoid |lambda - 1| < 0.02.
- workers > 1 fans grid points out to a process pool; results are collected
  in grid order whatever the completion order.

Where it runs: Imported by sweep/cli.py and tools/build/reproduce_figures.py.
Common failures + fixes:
  - NumericalError "convergence gate": raise n_sites (the chain is too
    short for the sampled lambda, usually right at lambda = 1).
  - NumericalError "oracle gate failed": see chain/validate.py.
"""

from __future__ import annotations

import logging
import sys
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache, partial
from typing import Any

import numpy as np
from tqdm import tqdm

from ..chain import (
    ChainConfig,
    SiteQuad,
    critical_coupling,
    cross_validate,
    ed_rdm,
    ff_correlators,
    ff_rdm_sites,
    oracle_gate,
)
from ..config.schema import CSV_COLUMNS, MEASURE_COLUMNS
from ..measures import concurrence, fourtangle_mixed, one_tangle, residual_tangle
from ..mixtures import get_family, rank2_point, rank3_point
from ..numkernel import DensityMatrix, NumericalError, partial_trace
from .plan import SweepPlan, SweepRow

logger = logging.getLogger(__name__)

CONVERGENCE_TOL = 1e-6
# finite-size corrections at lambda_c decay only as a power of N
CRITICAL_WINDOW = 0.02
QUIET_CONCURRENCE = 1e-9
QUIET_STREAK = 3

Values = tuple[Any, ...]
Task = Callable[[], list[Values]]


# ---------------------------------------------------------------------------
# Reduced states from either backend
# ---------------------------------------------------------------------------

class _Source:
    def __init__(self, cfg: ChainConfig, use_cache: bool) -> None:
        self.cfg = cfg
        self.table = ff_correlators(cfg, use_cache=use_cache) if cfg.backend == "freefermion" else None

    def rdm(self, sites: Sequence[int]) -> DensityMatrix:
        if self.table is not None:
            return ff_rdm_sites(self.table, sites)
        return ed_rdm(self.cfg, sites)


# ---------------------------------------------------------------------------
# Per-point evaluators (top level so worker processes can unpickle them)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=16)
def _family_states(name: str, phi: float):
    return get_family(name).states(phi)


def mixture_point(family: str, phi: float, p: float, q: float | None = None) -> list[Values]:
    states = _family_states(family, phi)
    if q is None:
        return [tuple(rank2_point(*states, p))]
    return [tuple(rank3_point(*states, p, q))]


def chain_c4_point(
    lam: float,
    gamma: float,
    n_sites: int,
    backend: str,
    quads: tuple[SiteQuad, ...],
    use_cache: bool = True,
) -> list[Values]:
    source = _Source(ChainConfig(lam, gamma, n_sites, backend), use_cache)
    rows = []
    for quad in quads:
        rho = source.rdm(quad.centered_sites(n_sites))
        c4 = fourtangle_mixed(rho)
        c2_first = concurrence(partial_trace(rho, (0, 1)))
        c2_last = concurrence(partial_trace(rho, (2, 3)))
        bound = c2_first * c2_last
        rows.append(
            (lam, gamma, quad.n1, quad.n2, quad.n3, n_sites, c4, c2_first, c2_last, bound, bound - c4)
        )
    return rows


def residual_point(
    lam: float,
    gamma: float,
    n_sites: int,
    backend: str,
    max_distance: int,
    use_cache: bool = True,
) -> list[Values]:
    cfg = ChainConfig(lam, gamma, n_sites, backend)
    source = _Source(cfg, use_cache)
    center = cfg.central_site()
    tau1 = one_tangle(source.rdm((center,)))

    found: list[float] = []
    streak = 0
    d_max = 0
    for d in range(1, max_distance + 1):
        partners = [s for s in (center - d, center + d) if 0 <= s < n_sites]
        if not partners:
            break
        values = [concurrence(source.rdm(tuple(sorted((center, s))))) for s in partners]
        found.extend(values)
        d_max = d
        streak = streak + 1 if all(c < QUIET_CONCURRENCE for c in values) else 0
        if streak >= QUIET_STREAK:
            break
    sum_c2sq = float(sum(c * c for c in found))
    return [(lam, gamma, n_sites, tau1, sum_c2sq, residual_tangle(tau1, found), d_max)]


def validate_point(lam: float, gamma: float, n_sites: int, quads: tuple[SiteQuad, ...]) -> list[Values]:
    cfg = ChainConfig(lam, gamma, n_sites, backend="ed")
    return [
        (lam, gamma, n_sites, q.n1, q.n2, q.n3, cross_validate(cfg, q))
        for q in quads
    ]


def _call(task: Task) -> list[Values]:
    return task()


# ---------------------------------------------------------------------------
# Task lists
# ---------------------------------------------------------------------------

def _chain_task(plan: SweepPlan, lam: float, n_sites: int) -> Task:
    if plan.mode == "chain-c4":
        return partial(chain_c4_point, lam, plan.gamma, n_sites, plan.backend, plan.quads, plan.use_cache)
    return partial(residual_point, lam, plan.gamma, n_sites, plan.backend, plan.max_distance, plan.use_cache)


def build_tasks(plan: SweepPlan) -> list[Task]:
    if plan.mode == "mixture-rank2":
        return [partial(mixture_point, plan.family, plan.phi, float(p)) for p in plan.p_grid.values()]
    if plan.mode == "mixture-rank3":
        return [
            partial(mixture_point, plan.family, plan.phi, float(p), float(q))
            for p in plan.p_grid.values()
            for q in plan.q_grid.values()
        ]
    lambdas = [float(x) for x in plan.lambda_grid.values()]
    if plan.mode == "validate":
        return [partial(validate_point, lam, plan.gamma, plan.oracle_sites, plan.quads) for lam in lambdas]
    return [_chain_task(plan, lam, plan.n_sites) for lam in lambdas]


def _execute(tasks: list[Task], workers: int, progress: bool, desc: str) -> list[list[Values]]:
    bar = partial(tqdm, total=len(tasks), desc=desc, unit="pt", disable=not progress, file=sys.stderr)
    if workers <= 1 or len(tasks) <= 1:
        return [_call(t) for t in bar(tasks)]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        chunk = max(1, len(tasks) // (8 * workers))
        return list(bar(executor.map(_call, tasks, chunksize=chunk)))


# ---------------------------------------------------------------------------
# Gates
# ---------------------------------------------------------------------------

def gate_lambdas(plan: SweepPlan) -> list[float]:
    vals = plan.lambda_grid.values()
    picks = [float(vals[0]), float(vals[len(vals) // 2]), float(vals[-1])]
    return sorted(set(picks))


def convergence_indices(lambdas: Sequence[float], samples: int) -> list[int]:
    """
    Evenly spread grid indices; picks closer than CRITICAL_WINDOW to
    lambda_c move to the nearest grid point outside that window.
    """
    count = len(lambdas)
    picks = {int(i) for i in np.rint(np.linspace(0, count - 1, min(samples, count)))}
    outside = [i for i, lam in enumerate(lambdas) if abs(lam - critical_coupling()) >= CRITICAL_WINDOW]
    if not outside:
        return sorted(picks)
    return sorted({min(outside, key=lambda j: (abs(j - i), j)) for i in picks})


def convergence_gate(plan: SweepPlan, tasks_groups: list[list[Values]]) -> float:
    """Largest change of any measure when the sampled points are rerun on a 2N chain."""
    columns = CSV_COLUMNS[plan.mode]
    watched = [i for i, c in enumerate(columns) if c in MEASURE_COLUMNS or c == "residual"]
    lambdas = [float(x) for x in plan.lambda_grid.values()]
    worst = 0.0
    for idx in convergence_indices(lambdas, plan.convergence_samples):
        doubled = _chain_task(plan, lambdas[idx], 2 * plan.n_sites)()
        for base, ref in zip(tasks_groups[idx], doubled):
            for i in watched:
                diff = abs(float(base[i]) - float(ref[i]))
                if diff > CONVERGENCE_TOL:
                    raise NumericalError(
                        f"convergence gate: {columns[i]} changes by {diff:.3e} (> {CONVERGENCE_TOL:g}) "
                        f"from N={plan.n_sites} to N={2 * plan.n_sites} at lambda={lambdas[idx]:g}; "
                        "increase n_sites."
                    )
                worst = max(worst, diff)
    logger.info("convergence gate passed (largest change %.2e)", worst)
    return worst


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def run_sweep(plan: SweepPlan, progress: bool = False) -> list[SweepRow]:
    gated = plan.mode in ("chain-c4", "chain-residual") and plan.backend == "freefermion"
    if gated and plan.oracle_check:
        dev = oracle_gate(plan.gamma, gate_lambdas(plan), n_sites=plan.oracle_sites)
        logger.info("oracle gate passed (max deviation %.2e)", dev)

    tasks = build_tasks(plan)
    groups = _execute(tasks, plan.workers, progress, desc=plan.mode)

    if gated and plan.convergence_check:
        convergence_gate(plan, groups)
    return [SweepRow(plan.mode, values) for group in groups for values in group]
