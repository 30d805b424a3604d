"""
INSTRUCTION HEADER

What this file does (plain English):
- Exact-diagonalization backend for short open chains (N <= 14):
    build_hamiltonian      sparse CSR Hamiltonian (real symmetric, 2^N square)
    ed_ground_state        normalized ground state; when the two lowest levels
                           are within 1e-10 the even-parity combination
    ed_ground_energy       lowest eigenvalue
    ed_pauli_expectation   <psi| P |psi> for a Pauli string on given sites
    ed_rdm                 reduced density matrix on ascending sites
- Parity is prod_i Z_i = (-1)^(number of 1 bits); |0...0> is even.

Where it runs: Imported by chain/validate.py, the CLI and tests. It is the
oracle the free-fermion backend is checked against.
Inputs:  ChainConfig.
Outputs: scipy.sparse matrices, PureState, floats, DensityMatrix.
Common failures + fixes:
  - ValueError "limited to N <= 14": shrink N; the dense vector has 2^N entries.
  - ARPACK non-convergence (N >= 9): rare; rerun, or lower N for the oracle.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from functools import lru_cache

import numpy as np
import scipy.sparse as sparse
from scipy.sparse.linalg import eigsh

from ..numkernel import PAULI, DensityMatrix, PureState, reduced_state
from .model import ED_MAX_SITES, ChainConfig

logger = logging.getLogger(__name__)

DENSE_MAX_DIM = 256
DEGENERACY_TOL = 1e-10

_XX = np.kron(PAULI["X"], PAULI["X"]).real
_YY = np.kron(PAULI["Y"], PAULI["Y"]).real
_Z = PAULI["Z"].real


def _check_size(cfg: ChainConfig) -> None:
    if cfg.n_sites > ED_MAX_SITES:
        raise ValueError(f"Exact diagonalization is limited to N <= {ED_MAX_SITES}, got N={cfg.n_sites}.")


def _embed(op: np.ndarray, first: int, n_sites: int) -> sparse.csr_matrix:
    """op acting on sites first, first+1, ... inside the N-site chain."""
    width = int(round(np.log2(op.shape[0])))
    left = sparse.identity(1 << first, format="csr")
    right = sparse.identity(1 << (n_sites - first - width), format="csr")
    return sparse.kron(sparse.kron(left, sparse.csr_matrix(op), "csr"), right, "csr")


def build_hamiltonian(cfg: ChainConfig) -> sparse.csr_matrix:
    """
    -lambda sum_i [(1+g)/2 X_i X_{i+1} + (1-g)/2 Y_i Y_{i+1}] - sum_i Z_i, open chain.
    """
    _check_size(cfg)
    n = cfg.n_sites
    bond = -cfg.lam * (0.5 * (1.0 + cfg.gamma) * _XX + 0.5 * (1.0 - cfg.gamma) * _YY)
    h = sparse.csr_matrix((1 << n, 1 << n), dtype=float)
    for i in range(n - 1):
        h = h + _embed(bond, i, n)
    for i in range(n):
        h = h + _embed(-_Z, i, n)
    return h.tocsr()


def parity_diagonal(n_sites: int) -> np.ndarray:
    idx = np.arange(1 << n_sites)
    ones = np.zeros_like(idx)
    for bit in range(n_sites):
        ones ^= (idx >> bit) & 1
    return 1.0 - 2.0 * ones


def _lowest_pair(cfg: ChainConfig) -> tuple[np.ndarray, np.ndarray]:
    h = build_hamiltonian(cfg)
    dim = h.shape[0]
    if dim <= DENSE_MAX_DIM:
        w, v = np.linalg.eigh(h.toarray())
        return w[:2], v[:, :2]
    v0 = np.ones(dim) / np.sqrt(dim)
    w, v = eigsh(h, k=2, which="SA", v0=v0)
    order = np.argsort(w)
    return w[order], v[:, order]


@lru_cache(maxsize=32)
def _ground(cfg: ChainConfig) -> tuple[float, PureState]:
    w, v = _lowest_pair(cfg)
    psi = v[:, 0]
    if w.size > 1 and abs(w[1] - w[0]) < DEGENERACY_TOL:
        parity = parity_diagonal(cfg.n_sites)
        pmat = v.conj().T @ (parity[:, None] * v)
        pw, pv = np.linalg.eigh(0.5 * (pmat + pmat.conj().T))
        psi = v @ pv[:, -1]
        logger.debug(
            "ED: degenerate pair at lambda=%g gamma=%g N=%d (gap %.2e); parity %+.3f kept",
            cfg.lam, cfg.gamma, cfg.n_sites, w[1] - w[0], pw[-1],
        )
    psi = psi / np.linalg.norm(psi)
    return float(w[0]), PureState(cfg.n_sites, psi)


def ed_ground_state(cfg: ChainConfig) -> PureState:
    return _ground(cfg)[1]


def ed_ground_energy(cfg: ChainConfig) -> float:
    return _ground(cfg)[0]


def ed_pauli_expectation(psi: PureState, sites: Sequence[int], labels: str) -> float:
    if len(sites) != len(labels):
        raise ValueError(f"Got {len(sites)} sites but {len(labels)} labels ({labels!r}).")
    n = psi.n_qubits
    t = psi.amplitudes.reshape([2] * n)
    out = t
    for site, label in zip(sites, labels):
        if label == "I":
            continue
        if label not in PAULI:
            raise ValueError(f"Unknown Pauli label {label!r} in {labels!r}.")
        out = np.moveaxis(np.tensordot(PAULI[label], out, axes=([1], [site])), 0, site)
    return float(np.vdot(t, out).real)


def ed_rdm(cfg: ChainConfig, sites: Sequence[int]) -> DensityMatrix:
    return reduced_state(ed_ground_state(cfg), sites)
