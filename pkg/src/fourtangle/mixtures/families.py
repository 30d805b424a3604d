"""
INSTRUCTION HEADER

What this file does (plain English):
- mix(states, weights): sum_i w_i |psi_i><psi_i|.
- FAMILIES: the named rank-2 and rank-3 mixture families, addressable by
  name from plans and the CLI:
    rank 2:  rho = p a + (1-p) b
    rank 3:  rho = p a + (1-p) (q b + (1-q) c)
- rank2_curve / rank3_surface evaluate C4 and the three 2|2 concurrence
  products on a grid and return a pandas DataFrame whose columns are
  CSV_COLUMNS["mixture-rank2"] / ["mixture-rank3"].
- find_product_zeros locates the zeros of C2(12) * C2(34) along a rank-2
  family: sign changes of min(raw C2(12), raw C2(34)) are bracketed on the
  grid and refined with Brent's method.

Where it runs: Imported by sweep/runner.py, sweep/cli.py and tests.
Inputs:  PureStates or family names plus p / q grids.
Outputs: DensityMatrix, pandas DataFrames, lists of zero locations.
Common failures + fixes:
  - ValueError "weights": weights must be >= 0 and sum to 1 within 1e-12.
  - ValueError "Unknown mixture family": use one of FAMILIES.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Union

import numpy as np
import pandas as pd
from scipy.optimize import brentq

from ..config.schema import CSV_COLUMNS
from ..measures import bipartition_products, fourtangle_mixed, spinflip_spectrum
from ..numkernel import DensityMatrix, PureState, partial_trace
from .named_states import bell_product, named_state

WEIGHT_TOL = 1e-12
DEFAULT_POINTS = 201
DEFAULT_PHASE = math.pi / 2


# ---------------------------------------------------------------------------
# Mixing
# ---------------------------------------------------------------------------

def mix(states: Sequence[PureState], weights: Sequence[float]) -> DensityMatrix:
    if len(states) == 0 or len(states) != len(weights):
        raise ValueError(
            f"mix needs one weight per state, got {len(states)} states and {len(weights)} weights."
        )
    w = np.asarray(weights, dtype=float)
    if np.any(w < 0.0):
        raise ValueError(f"Mixture weights must be non-negative, got {list(w)}.")
    if abs(float(w.sum()) - 1.0) > WEIGHT_TOL:
        raise ValueError(f"Mixture weights must sum to 1, got sum {float(w.sum())!r}.")
    n = states[0].n_qubits
    if any(s.n_qubits != n for s in states):
        raise ValueError(f"Mixture states differ in size: {[s.n_qubits for s in states]} qubits.")

    rho = np.zeros((1 << n, 1 << n), dtype=complex)
    for weight, state in zip(w, states):
        psi = state.amplitudes
        rho += weight * np.outer(psi, psi.conj())
    return DensityMatrix(n, rho)


def rank2_weights(p: float) -> tuple[float, float]:
    return p, 1.0 - p


def rank3_weights(p: float, q: float) -> tuple[float, float, float]:
    return p, (1.0 - p) * q, (1.0 - p) * (1.0 - q)


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------

# a component is a 4-qubit tag, or a (tag, tag) Bell product on (12)(34)
Component = Union[str, tuple[str, str]]


@dataclass(frozen=True)
class MixtureFamily:
    name: str
    components: tuple[Component, ...]
    description: str

    @property
    def rank(self) -> int:
        return len(self.components)

    @property
    def uses_phase(self) -> bool:
        return any(
            isinstance(c, tuple) and "PhiPlusPhase" in c for c in self.components
        )

    def states(self, phi: float | None = None) -> tuple[PureState, ...]:
        if self.uses_phase and phi is None:
            phi = DEFAULT_PHASE
        out = []
        for comp in self.components:
            if isinstance(comp, tuple):
                out.append(bell_product(comp[0], comp[1], phi=phi if self.uses_phase else None))
            else:
                out.append(named_state(comp))
        return tuple(out)

    def density(self, p: float, q: float | None = None, phi: float | None = None) -> DensityMatrix:
        states = self.states(phi)
        if self.rank == 2:
            if q is not None:
                raise ValueError(f"Family {self.name!r} is rank 2 and takes no q.")
            return mix(states, rank2_weights(p))
        if q is None:
            raise ValueError(f"Family {self.name!r} is rank 3 and needs q.")
        return mix(states, rank3_weights(p, q))


FAMILIES: dict[str, MixtureFamily] = {
    f.name: f
    for f in (
        MixtureFamily("ghz-w", ("GHZ4", "W4"), "GHZ4 / W4"),
        MixtureFamily("ghz-bell", ("GHZ4", ("PhiPlus", "PhiPlus")), "GHZ4 / Phi+ x Phi+"),
        MixtureFamily(
            "ghz-bell-phase",
            ("GHZ4", ("PhiPlusPhase", "PhiPlusPhase")),
            "GHZ4 / (|11> + e^{i phi}|00>)/sqrt2 on both pairs",
        ),
        MixtureFamily("bell-w", (("PhiPlus", "PhiPlus"), "W4"), "Phi+ x Phi+ / W4"),
        MixtureFamily(
            "ghz-bell-bell",
            ("GHZ4", ("PhiMinus", "PhiMinus"), ("PsiMinus", "PsiMinus")),
            "GHZ4 / Phi- x Phi- / Psi- x Psi-",
        ),
        MixtureFamily(
            "ghzprime-bell-w",
            ("GHZ4prime", ("PhiPlus", "PsiMinus"), "W4"),
            "GHZ4' / Phi+ x Psi- / W4",
        ),
        MixtureFamily(
            "w-bell-bell",
            ("W4", ("PhiMinus", "PhiMinus"), ("PhiPlus", "PhiPlus")),
            "W4 / Phi- x Phi- / Phi+ x Phi+",
        ),
        MixtureFamily(
            "w-ghz-ghz",
            ("W4", "GHZ4", "GHZ4prime"),
            "W4 / GHZ4 / GHZ4'",
        ),
    )
}


def get_family(name: str) -> MixtureFamily:
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValueError(
            f"Unknown mixture family {name!r}. Expected one of {', '.join(FAMILIES)}."
        ) from None


# ---------------------------------------------------------------------------
# Curves and surfaces
# ---------------------------------------------------------------------------

def default_grid(points: int = DEFAULT_POINTS) -> np.ndarray:
    return np.linspace(0.0, 1.0, points)


def _check_grid(grid: Sequence[float], name: str) -> np.ndarray:
    g = np.asarray(grid, dtype=float).reshape(-1)
    if g.size == 0:
        raise ValueError(f"{name} grid is empty.")
    if np.any(g < 0.0) or np.any(g > 1.0):
        raise ValueError(f"{name} grid values must lie in [0, 1].")
    return g


def _measure_row(rho: DensityMatrix) -> list[float]:
    products = bipartition_products(rho)
    return [fourtangle_mixed(rho), products["12_34"], products["13_24"], products["14_23"]]


def rank2_point(a: PureState, b: PureState, p: float) -> list[float]:
    return [p, *_measure_row(mix((a, b), rank2_weights(p)))]


def rank3_point(a: PureState, b: PureState, c: PureState, p: float, q: float) -> list[float]:
    return [p, q, *_measure_row(mix((a, b, c), rank3_weights(p, q)))]


def rank2_curve(a: PureState, b: PureState, grid: Sequence[float] | None = None) -> pd.DataFrame:
    g = _check_grid(default_grid() if grid is None else grid, "p")
    rows = [rank2_point(a, b, float(p)) for p in g]
    return pd.DataFrame(rows, columns=CSV_COLUMNS["mixture-rank2"])


def rank3_surface(
    a: PureState,
    b: PureState,
    c: PureState,
    p_grid: Sequence[float] | None = None,
    q_grid: Sequence[float] | None = None,
) -> pd.DataFrame:
    """Rows ordered p-major, q-minor."""
    pg = _check_grid(default_grid() if p_grid is None else p_grid, "p")
    qg = _check_grid(default_grid() if q_grid is None else q_grid, "q")
    rows = [rank3_point(a, b, c, float(p), float(q)) for p in pg for q in qg]
    return pd.DataFrame(rows, columns=CSV_COLUMNS["mixture-rank3"])


# ---------------------------------------------------------------------------
# Zeros of the concurrence product
# ---------------------------------------------------------------------------

def _pair_margin(
    a: PureState,
    b: PureState,
    p: float,
    first: tuple[int, int],
    second: tuple[int, int],
) -> float:
    rho = mix((a, b), rank2_weights(p))
    return min(
        spinflip_spectrum(partial_trace(rho, first)).raw(),
        spinflip_spectrum(partial_trace(rho, second)).raw(),
    )


def find_product_zeros(
    a: PureState,
    b: PureState,
    grid: Sequence[float] | None = None,
    first: tuple[int, int] = (0, 1),
    second: tuple[int, int] = (2, 3),
    xtol: float = 1e-12,
) -> list[float]:
    """
    p values where C2(first) * C2(second) of p a + (1-p) b switches between
    zero and positive.

    The product is positive exactly where both unclamped concurrences are,
    so the zeros are the sign changes of their minimum.
    """
    g = _check_grid(default_grid() if grid is None else grid, "p")
    values = [_pair_margin(a, b, float(p), first, second) for p in g]
    zeros: list[float] = []
    for i in range(len(g) - 1):
        lo, hi = float(g[i]), float(g[i + 1])
        f_lo, f_hi = values[i], values[i + 1]
        if f_lo == 0.0:
            zeros.append(lo)
        elif f_lo * f_hi < 0.0:
            zeros.append(
                float(brentq(lambda p: _pair_margin(a, b, p, first, second), lo, hi, xtol=xtol))
            )
    if values and values[-1] == 0.0:
        zeros.append(float(g[-1]))
    return [z for i, z in enumerate(zeros) if i == 0 or not math.isclose(z, zeros[i - 1])]
