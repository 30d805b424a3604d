"""
INSTRUCTION HEADER

What this file does (plain English):
- Builds the spin-flip spectrum of a 2- or 4-qubit density matrix:
      R = sqrt(rho) S rho* S sqrt(rho),   S = sigma_y tensored n times
  and returns the square roots of R's eigenvalues, descending.
- lambda_i are taken as the singular values of A = sqrt(rho) S sqrt(rho)*
  (R = A A^+), so rounding noise in R is never square-rooted. The flip
  operator must be Hermitian.
- rho* is entrywise conjugation in the computational basis.

Where it runs: Imported only (measures/tangles.py).
Inputs:  DensityMatrix over 2 or 4 qubits (or an explicit flip operator).
Outputs: SpinFlipSpectrum.
Common failures + fixes:
  - ValueError "flip operator": pass a flip whose dimension matches rho.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..numkernel import DensityMatrix, psd_sqrt, spin_flip_operator


@dataclass(frozen=True)
class SpinFlipSpectrum:
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        vals = tuple(float(v) for v in self.values)
        if any(v < 0.0 for v in vals):
            raise ValueError(f"Spin-flip spectrum must be non-negative, got {vals}.")
        if any(a < b for a, b in zip(vals, vals[1:])):
            raise ValueError(f"Spin-flip spectrum must be sorted descending, got {vals}.")
        object.__setattr__(self, "values", vals)

    @property
    def largest(self) -> float:
        return self.values[0] if self.values else 0.0

    @property
    def total(self) -> float:
        return float(sum(self.values))

    def raw(self) -> float:
        """
        2 lambda_max - sum(lambda), before clamping at zero.

        For two qubits this is lambda_1 - lambda_2 - lambda_3 - lambda_4, the
        unclamped concurrence.
        """
        return 2.0 * self.largest - self.total


def spinflip_spectrum(rho: DensityMatrix, flip: np.ndarray | None = None) -> SpinFlipSpectrum:
    if flip is None:
        if rho.n_qubits not in (2, 4):
            raise ValueError(
                f"No default flip operator for {rho.n_qubits} qubits; expected 2 or 4."
            )
        flip = spin_flip_operator(rho.n_qubits)
    flip = np.asarray(flip, dtype=complex)
    if flip.shape != rho.matrix.shape:
        raise ValueError(
            f"flip operator shape {flip.shape} does not match density matrix {rho.matrix.shape}."
        )

    root = psd_sqrt(rho.matrix)
    # R = A A^+ with A = sqrt(rho) S sqrt(rho)*, so lambda_i are the singular values of A
    a = root @ flip @ root.conj()
    lam = np.linalg.svd(a, compute_uv=False)
    return SpinFlipSpectrum(tuple(float(x) for x in np.sort(lam)[::-1]))
