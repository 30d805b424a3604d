"""
INSTRUCTION HEADER

What this file does (plain English):
- Defines the two state carriers every other module passes around:
    PureState      normalized amplitude vector over n qubits
    DensityMatrix  Hermitian, unit-trace, PSD 2^n x 2^n matrix
- Defines NumericalError, raised whenever a computation fails for numerical
  (not input-shape) reasons: Jacobi non-convergence, PSD violations,
  inconsistent backends, failed gates.
- Bit convention, used everywhere in the package: qubit 0 is the leftmost
  tensor factor, i.e. the most significant bit of a basis index. |1000> is
  index 8, |0001> is index 1.

Where it runs: Imported only. Never run directly.
Inputs:  numpy arrays.
Outputs: immutable state objects (arrays are copied and marked read-only).
Common failures + fixes:
  - "not normalized": normalize the amplitudes before constructing.
  - "not Hermitian" / "trace": build the matrix as sum_i w_i |psi_i><psi_i|.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

NORM_TOL = 1e-12
DM_TOL = 1e-10


class NumericalError(RuntimeError):
    """A computation failed for numerical reasons (not malformed input)."""


def _qubit_count(dim: int) -> int:
    n = int(dim).bit_length() - 1
    if dim < 1 or (1 << n) != dim:
        raise ValueError(f"Dimension {dim} is not a power of two.")
    return n


def _frozen(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, dtype=complex, copy=True)
    out.flags.writeable = False
    return out


@dataclass(frozen=True, eq=False)
class PureState:
    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size != 1 << self.n_qubits:
            raise ValueError(
                f"PureState over {self.n_qubits} qubits needs {1 << self.n_qubits} "
                f"amplitudes, got {amps.size}."
            )
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"PureState not normalized: |psi| = {norm!r}.")
        object.__setattr__(self, "amplitudes", _frozen(amps))

    @classmethod
    def from_amplitudes(cls, amplitudes: np.ndarray, normalize: bool = False) -> "PureState":
        amps = np.asarray(amplitudes, dtype=complex).reshape(-1)
        if normalize:
            norm = np.linalg.norm(amps)
            if norm == 0.0:
                raise ValueError("Cannot normalize the zero vector.")
            amps = amps / norm
        return cls(_qubit_count(amps.size), amps)

    def projector(self) -> "DensityMatrix":
        psi = self.amplitudes
        return DensityMatrix(self.n_qubits, np.outer(psi, psi.conj()))

    def kron(self, other: "PureState") -> "PureState":
        return PureState(self.n_qubits + other.n_qubits, np.kron(self.amplitudes, other.amplitudes))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    n_qubits: int
    matrix: np.ndarray

    def __post_init__(self) -> None:
        rho = np.asarray(self.matrix, dtype=complex)
        dim = 1 << self.n_qubits
        if rho.shape != (dim, dim):
            raise ValueError(
                f"DensityMatrix over {self.n_qubits} qubits must be {dim}x{dim}, got {rho.shape}."
            )
        herm_err = float(np.max(np.abs(rho - rho.conj().T)))
        if herm_err > DM_TOL:
            raise ValueError(f"DensityMatrix not Hermitian (max |rho - rho^+| = {herm_err:.3e}).")
        trace = complex(np.trace(rho))
        if abs(trace - 1.0) > DM_TOL:
            raise ValueError(f"DensityMatrix trace is {trace!r}, expected 1.")
        w_min = float(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))[0])
        if w_min < -DM_TOL:
            raise ValueError(f"DensityMatrix has negative eigenvalue {w_min:.3e}.")
        object.__setattr__(self, "matrix", _frozen(rho))

    @property
    def dim(self) -> int:
        return 1 << self.n_qubits

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> "DensityMatrix":
        matrix = np.asarray(matrix, dtype=complex)
        return cls(_qubit_count(matrix.shape[0]), matrix)

    @classmethod
    def maximally_mixed(cls, n_qubits: int) -> "DensityMatrix":
        dim = 1 << n_qubits
        return cls(n_qubits, np.eye(dim, dtype=complex) / dim)

    def kron(self, other: "DensityMatrix") -> "DensityMatrix":
        return DensityMatrix(self.n_qubits + other.n_qubits, np.kron(self.matrix, other.matrix))
