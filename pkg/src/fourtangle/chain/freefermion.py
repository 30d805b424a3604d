"""
INSTRUCTION HEADER

What this file does (plain English):
- Free-fermion backend: solves the open XY chain of any length through the
  Jordan-Wigner map and returns the table of elementary contractions.
- Majorana operators (qubit 0 leftmost, S_j = Z_0 ... Z_{j-1}):
      A_j = S_j X_j,      B_j = -i S_j Y_j
  so that A_j^2 = 1, B_j^2 = -1, Z_j = A_j B_j,
      X_j X_{j+1} = B_j A_{j+1},   Y_j Y_{j+1} = -A_j B_{j+1}.
- With Hermitian a = A, b = iB the Hamiltonian is (i/2) sum_jk a_j M_jk b_k,
      M_jj = 2,  M_{j+1,j} = -lambda (1+gamma),  M_{j,j+1} = -lambda (1-gamma).
  For the SVD M = U diag(s) V^T the ground state has
      G[j, k] = <B_j A_k> = -(V U^T)[j, k],   <Z_j> = -G[j, j].
- Vacuum parity is det(U) det(V). When the smallest singular value is below
  1e-10 and the parity is odd, that zero mode is flipped so the even-parity
  ground state is used.

Where it runs: Imported by chain/wick.py, chain/rdm.py and sweep/runner.py.
Inputs:  ChainConfig (any N; N = 1000 takes well under a second).
Outputs: CorrelatorTable (immutable, safe to share between workers).
Common failures + fixes:
  - numpy LinAlgError "SVD did not converge": practically never for this
    bidiagonal-like matrix; check lambda / gamma are finite.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .model import ChainConfig

logger = logging.getLogger(__name__)

ZERO_MODE_TOL = 1e-10
ENTRY_BOUND = 1.0 + 1e-9
TABLE_CACHE_SIZE = 8


@dataclass(frozen=True, eq=False)
class CorrelatorTable:
    config: ChainConfig
    g: np.ndarray

    def __post_init__(self) -> None:
        g = np.array(self.g, dtype=float, copy=True)
        n = self.config.n_sites
        if g.shape != (n, n):
            raise ValueError(f"Correlator table must be {n}x{n}, got {g.shape}.")
        worst = float(np.max(np.abs(g)))
        if worst > ENTRY_BOUND:
            raise ValueError(f"Correlator entry magnitude {worst!r} exceeds 1.")
        g.flags.writeable = False
        object.__setattr__(self, "g", g)

    @property
    def n_sites(self) -> int:
        return self.config.n_sites

    def contraction(self, first: tuple[int, int], second: tuple[int, int]) -> float:
        """
        <g1 g2> for two distinct Majoranas given as (site, kind), kind 0 = A, 1 = B.
        """
        (j, kj), (k, kk) = first, second
        if kj == kk:
            return 0.0
        if kj == 0:
            return -float(self.g[k, j])
        return float(self.g[j, k])

    def magnetization(self, site: int) -> float:
        return -float(self.g[site, site])


def coupling_matrix(cfg: ChainConfig) -> np.ndarray:
    n = cfg.n_sites
    m = 2.0 * np.eye(n)
    idx = np.arange(n - 1)
    m[idx + 1, idx] = -cfg.lam * (1.0 + cfg.gamma)
    m[idx, idx + 1] = -cfg.lam * (1.0 - cfg.gamma)
    return m


def _solve(cfg: ChainConfig) -> CorrelatorTable:
    m = coupling_matrix(cfg)
    u, s, vt = np.linalg.svd(m)
    v = vt.T
    parity = float(np.sign(np.linalg.det(u) * np.linalg.det(v)))
    k = int(np.argmin(s))
    if s[k] < ZERO_MODE_TOL and parity < 0.0:
        v[:, k] = -v[:, k]
        logger.debug(
            "free fermions: zero mode s=%.2e at lambda=%g gamma=%g N=%d flipped to even parity",
            s[k], cfg.lam, cfg.gamma, cfg.n_sites,
        )
    return CorrelatorTable(cfg, -(v @ u.T))


@lru_cache(maxsize=TABLE_CACHE_SIZE)
def _cached(cfg: ChainConfig) -> CorrelatorTable:
    return _solve(cfg)


def ff_correlators(cfg: ChainConfig, use_cache: bool = True) -> CorrelatorTable:
    return _cached(cfg) if use_cache else _solve(cfg)


def clear_cache() -> None:
    _cached.cache_clear()
