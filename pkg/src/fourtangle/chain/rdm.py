"""
INSTRUCTION HEADER

What this file does (plain English):
- Builds ground-state reduced density matrices from the free-fermion
  backend through the Pauli expansion
      rho = 2^-k sum_P <P> P     (P over the 4^k Pauli strings on k sites)
    ff_rdm   four sites of a SiteQuad (16 x 16), centered in the chain
    ff_rdm2  a site pair (4 x 4)
    ff_rdm1  one site (2 x 2)
    ff_rdm_sites  any ascending site list
- The trace is exactly 1 (only the identity string contributes to it).
- PSD repair: eigenvalues down to -1e-7 are clamped to zero and the matrix
  renormalized (a warning is logged below -1e-9). Anything more negative
  means the backend is inconsistent and raises NumericalError.

Where it runs: Imported by sweep/runner.py and chain/validate.py.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence
from functools import lru_cache

import numpy as np

from ..numkernel import DensityMatrix, NumericalError, herm_eig, pauli_string
from .freefermion import CorrelatorTable
from .model import SiteQuad
from .wick import pauli_expectation

logger = logging.getLogger(__name__)

REPAIR_LIMIT = 1e-7
REPAIR_WARN = 1e-9


@lru_cache(maxsize=8)
def pauli_basis(k: int) -> tuple[tuple[str, np.ndarray], ...]:
    return tuple(
        ("".join(p), pauli_string("".join(p))) for p in itertools.product("IXYZ", repeat=k)
    )


def pauli_expectations(table: CorrelatorTable, sites: Sequence[int]) -> dict[str, float]:
    sites = tuple(sites)
    return {
        labels: pauli_expectation(table, sites, labels)
        for labels, _ in pauli_basis(len(sites))
    }


def repair_psd(matrix: np.ndarray, where: str = "") -> np.ndarray:
    m = 0.5 * (matrix + matrix.conj().T)
    w_min = float(np.linalg.eigvalsh(m)[0])
    if w_min >= 0.0:
        return m
    if w_min < -REPAIR_LIMIT:
        raise NumericalError(
            f"backend inconsistency: reduced state {where} has eigenvalue {w_min:.3e} "
            f"below -{REPAIR_LIMIT:g}."
        )
    if w_min < -REPAIR_WARN:
        logger.warning("Reduced state %s repaired: smallest eigenvalue %.3e clamped.", where, w_min)
    else:
        logger.debug("Reduced state %s: eigenvalue %.2e clamped.", where, w_min)
    w, v = herm_eig(m)
    w = np.clip(w, 0.0, None)
    fixed = (v * w) @ v.conj().T
    fixed = fixed / np.trace(fixed).real
    return 0.5 * (fixed + fixed.conj().T)


def ff_rdm_sites(table: CorrelatorTable, sites: Sequence[int]) -> DensityMatrix:
    sites = tuple(int(s) for s in sites)
    k = len(sites)
    rho = np.zeros((1 << k, 1 << k), dtype=complex)
    for labels, op in pauli_basis(k):
        value = pauli_expectation(table, sites, labels)
        if value != 0.0:
            rho += value * op
    rho /= 1 << k
    return DensityMatrix(k, repair_psd(rho, where=f"on sites {sites}"))


def ff_rdm(table: CorrelatorTable, quad: SiteQuad) -> DensityMatrix:
    return ff_rdm_sites(table, quad.centered_sites(table.n_sites))


def ff_rdm2(table: CorrelatorTable, pair: Sequence[int]) -> DensityMatrix:
    if len(pair) != 2:
        raise ValueError(f"ff_rdm2 needs two sites, got {pair}.")
    return ff_rdm_sites(table, pair)


def ff_rdm1(table: CorrelatorTable, site: int) -> DensityMatrix:
    return ff_rdm_sites(table, (site,))
