"""
INSTRUCTION HEADER

What this file does (plain English):
- FIGURES: one named sweep per published curve family, as plan overrides on
  top of the PLAN_KEYS defaults. figure_plan(name) turns one into a
  SweepPlan; tools/build/reproduce_figures.py builds them all.

Where it runs: Imported by tools/build/reproduce_figures.py and tests.
Common failures + fixes:
  - ValueError "Unknown figure": list names with `reproduce_figures.py --list`.
"""

from __future__ import annotations

from typing import Any, NamedTuple

from .plan import SweepPlan


class Figure(NamedTuple):
    description: str
    overrides: dict[str, Any]


def _chain(gamma: float, quads: str, stop: float = 2.0, step: float = 0.01, **extra: Any) -> dict[str, Any]:
    return {
        "mode": "chain-c4",
        "gamma": gamma,
        "quads": quads,
        "lambda_start": 0.0,
        "lambda_stop": stop,
        "lambda_step": step,
        **extra,
    }


def _rank2(family: str, **extra: Any) -> dict[str, Any]:
    return {"mode": "mixture-rank2", "family": family, "p_step": 0.005, **extra}


def _rank3(family: str) -> dict[str, Any]:
    return {"mode": "mixture-rank3", "family": family, "p_step": 0.02, "q_step": 0.02}


_ONE_N_ONE = ";".join(f"1,{n},1" for n in range(1, 10))

FIGURES: dict[str, Figure] = {
    "residual-ising": Figure(
        "one-tangle and sum of squared concurrences, Ising chain",
        {"mode": "chain-residual", "gamma": 1.0, "lambda_stop": 2.0, "lambda_step": 0.01},
    ),
    "ghz-bell": Figure("C4 of GHZ4 / Phi+ x Phi+", _rank2("ghz-bell")),
    "ghz-bell-phase": Figure("C4 of GHZ4 / ((|11>+i|00>)/sqrt2)^2", _rank2("ghz-bell-phase")),
    "ghz-w": Figure("C4 of GHZ4 / W4", _rank2("ghz-w")),
    "bell-w": Figure("C4 and C2(12) C2(34) of Phi+ x Phi+ / W4", _rank2("bell-w")),
    "ghz-bell-bell": Figure("C4 of GHZ4 / Phi- x Phi- / Psi- x Psi-", _rank3("ghz-bell-bell")),
    "ghzprime-bell-w": Figure("C4 of GHZ4' / Phi+ x Psi- / W4", _rank3("ghzprime-bell-w")),
    "w-bell-bell": Figure("C4 and concurrence products of W4 / Phi- x Phi- / Phi+ x Phi+", _rank3("w-bell-bell")),
    "w-ghz-ghz": Figure("C4 and concurrence products of W4 / GHZ4 / GHZ4'", _rank3("w-ghz-ghz")),
    "c4-1n1-ising": Figure("C4(1,n,1), n = 1..9, Ising", _chain(1.0, _ONE_N_ONE)),
    "c4-1n2-ising": Figure(
        "C4(1,n,2), n = 1..4, Ising (only (1,1,2) is non-zero)",
        _chain(1.0, "1,1,2;1,2,2;1,3,2;1,4,2"),
    ),
    "c4-2n2-ising": Figure("C4(2,n,2), n = 1..3, Ising", _chain(1.0, "2,1,2;2,2,2;2,3,2")),
    "c4-1n1-gamma0.5": Figure("C4(1,n,1), n = 1..9, gamma = 0.5", _chain(0.5, _ONE_N_ONE, stop=2.5)),
    "c4-2n2-gamma0.5": Figure("C4(2,n,2), n = 1, 2, gamma = 0.5", _chain(0.5, "2,1,2;2,2,2", stop=2.5)),
}
for _g in (0.55, 0.58, 0.59):
    FIGURES[f"c4-112-gamma{_g}"] = Figure(
        f"C4(1,1,2) with C2(1) C2(2), gamma = {_g}", _chain(_g, "1,1,2", stop=1.5, step=0.005)
    )
    FIGURES[f"c4-113-gamma{_g}"] = Figure(
        f"C4(1,1,3) with C2(1) C2(3), gamma = {_g}", _chain(_g, "1,1,3", stop=1.5, step=0.005)
    )


def figure_plan(name: str, **overrides: Any) -> SweepPlan:
    try:
        figure = FIGURES[name]
    except KeyError:
        raise ValueError(f"Unknown figure {name!r}. Expected one of {', '.join(FIGURES)}.") from None
    return SweepPlan.from_dict({**figure.overrides, **overrides})
