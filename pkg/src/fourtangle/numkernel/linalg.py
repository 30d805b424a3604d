"""
INSTRUCTION HEADER

What this file does (plain English):
- Small dense complex linear algebra used by the entanglement measures:
    herm_eig       cyclic Jacobi eigensolver for Hermitian matrices
                   (eigenvalues descending, unitary eigenvectors)
    psd_sqrt       square root of a Hermitian PSD matrix, with clamping of
                   rounding-level negative eigenvalues
    kron           tensor product A (x) B, block (i, j) = A[i, j] * B
    partial_trace  reduce a DensityMatrix to an ascending subset of qubits
    reduced_state  same, directly from a PureState (never forms |psi><psi|)
    pauli_string   kron of single-qubit Paulis from a label string "XIZY"
- Storage is row-major numpy; qubit 0 is the leftmost kron factor
  (see numkernel/states.py).

Where it runs: Imported only. Never run directly.
Inputs:  numpy arrays / state objects.
Outputs: numpy arrays / state objects; nothing is mutated in place.
Common failures + fixes:
  - ValueError "not Hermitian": symmetrize (M + M^+)/2 if the asymmetry is
    rounding; otherwise the caller built the wrong matrix.
  - NumericalError "not positive semidefinite": the input has an eigenvalue
    below -1e-12 * ||M||; it is not a density-like matrix.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

import numpy as np

from .states import DensityMatrix, NumericalError, PureState

logger = logging.getLogger(__name__)

HERM_TOL = 1e-10
JACOBI_TOL = 1e-14
JACOBI_MAX_DIM = 64
JACOBI_MAX_SWEEPS = 50
PSD_CLAMP = 1e-12

PAULI: dict[str, np.ndarray] = {
    "I": np.array([[1, 0], [0, 1]], dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


# ---------------------------------------------------------------------------
# Eigen-decomposition
# ---------------------------------------------------------------------------

def _check_hermitian(m: np.ndarray, scale: float) -> None:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"Expected a square matrix, got shape {m.shape}.")
    asym = float(np.linalg.norm(m - m.conj().T))
    if asym > HERM_TOL * max(scale, 1.0e-300):
        raise ValueError(
            f"Matrix is not Hermitian: ||M - M^+|| = {asym:.3e} exceeds "
            f"{HERM_TOL:g} * ||M|| = {HERM_TOL * scale:.3e}."
        )


def herm_eig(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi.

    Returns (w, V) with w descending and M = V diag(w) V^+.
    Sweeps stop once the off-diagonal Frobenius norm is at most
    1e-14 * ||M||_F.
    """
    a = np.array(m, dtype=complex, copy=True)
    scale = float(np.linalg.norm(a))
    _check_hermitian(a, scale)
    n = a.shape[0]
    if n > JACOBI_MAX_DIM:
        raise ValueError(f"herm_eig is for dimensions <= {JACOBI_MAX_DIM}, got {n}.")

    a = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=complex)
    if n == 1 or scale == 0.0:
        return _sorted_desc(a.diagonal().real.copy(), v)

    eps = np.finfo(float).eps
    threshold = max(JACOBI_TOL, 2.0 * n * eps) * scale
    skip = 1.0e-3 * eps * scale
    off_mask = ~np.eye(n, dtype=bool)

    for sweep in range(JACOBI_MAX_SWEEPS):
        off = float(np.sqrt(np.sum(np.abs(a[off_mask]) ** 2)))
        if off <= threshold:
            logger.debug("herm_eig: n=%d converged after %d sweeps (off=%.2e)", n, sweep, off)
            return _sorted_desc(a.diagonal().real.copy(), v)

        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= skip:
                    continue
                phase = apq / mag
                theta = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                sc = s * np.conj(phase)
                cc = c * np.conj(phase)

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - sc * col_q
                a[:, q] = s * col_p + cc * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * phase * row_q
                a[q, :] = s * row_p + c * phase * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real

                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - sc * vq
                v[:, q] = s * vp + cc * vq

    raise NumericalError(
        f"Jacobi eigensolver did not converge in {JACOBI_MAX_SWEEPS} sweeps (n={n})."
    )


def _sorted_desc(w: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    order = np.argsort(-w, kind="stable")
    return w[order], v[:, order]


def psd_sqrt(m: np.ndarray) -> np.ndarray:
    """Hermitian PSD square root; eigenvalues in [-1e-12 ||M||, 0) are clamped to 0."""
    w, v = herm_eig(m)
    norm = float(np.max(np.abs(w))) if w.size else 0.0
    if w.size and w[-1] < -PSD_CLAMP * norm:
        raise NumericalError(
            f"Matrix is not positive semidefinite: smallest eigenvalue {w[-1]:.3e} "
            f"below -{PSD_CLAMP:g} * ||M|| = {-PSD_CLAMP * norm:.3e}."
        )
    root = np.sqrt(np.clip(w, 0.0, None))
    s = (v * root) @ v.conj().T
    return 0.5 * (s + s.conj().T)


# ---------------------------------------------------------------------------
# Tensor products and reductions
# ---------------------------------------------------------------------------

def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def pauli_string(labels: str) -> np.ndarray:
    """Matrix of the Pauli string; labels[0] acts on qubit 0 (leftmost factor)."""
    out = np.ones((1, 1), dtype=complex)
    for label in labels:
        try:
            out = np.kron(out, PAULI[label])
        except KeyError:
            raise ValueError(f"Unknown Pauli label {label!r} in {labels!r}.") from None
    return out


def spin_flip_operator(n_qubits: int) -> np.ndarray:
    """sigma_y tensored n times; the flip of the concurrence (n=2) and the 4-tangle (n=4)."""
    return pauli_string("Y" * n_qubits)


def _check_keep(keep: Sequence[int], n_qubits: int) -> list[int]:
    keep = [int(k) for k in keep]
    for k in keep:
        if k < 0 or k >= n_qubits:
            raise ValueError(f"Site index {k} out of range for {n_qubits} qubits.")
    if len(set(keep)) != len(keep):
        raise ValueError(f"Duplicate site indices in {keep}.")
    if keep != sorted(keep):
        raise ValueError(f"Kept sites must be ascending, got {keep}.")
    return keep


def partial_trace(rho: DensityMatrix, keep: Sequence[int]) -> DensityMatrix:
    """Trace out every qubit not in `keep` (ascending); result ordered as `keep`."""
    n = rho.n_qubits
    keep = _check_keep(keep, n)
    if len(keep) == n:
        return rho
    other = [i for i in range(n) if i not in keep]
    t = rho.matrix.reshape([2] * (2 * n))
    perm = keep + other + [i + n for i in keep] + [i + n for i in other]
    dk, do = 1 << len(keep), 1 << len(other)
    t = np.transpose(t, perm).reshape(dk, do, dk, do)
    out = np.trace(t, axis1=1, axis2=3)
    return DensityMatrix(len(keep), 0.5 * (out + out.conj().T))


def reduced_state(psi: PureState, keep: Sequence[int]) -> DensityMatrix:
    """Reduced density matrix of a pure state on the ascending sites `keep`."""
    n = psi.n_qubits
    keep = _check_keep(keep, n)
    other = [i for i in range(n) if i not in keep]
    t = np.transpose(psi.amplitudes.reshape([2] * n), keep + other)
    m = t.reshape(1 << len(keep), -1)
    out = m @ m.conj().T
    return DensityMatrix(len(keep), 0.5 * (out + out.conj().T))
