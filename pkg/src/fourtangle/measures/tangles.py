"""
INSTRUCTION HEADER

What this file does (plain English):
- The entanglement measures reported by every sweep:
    fourtangle_pure    C4 of a 4-qubit pure state, |psi^T S4 psi|
    fourtangle_mixed   C4 of a 4-qubit density matrix, max(0, 2 l1 - sum l)
    concurrence        Wootters concurrence of a 2-qubit density matrix
    one_tangle         4 det(rho_1) of a single-qubit reduced state
    residual_tangle    tau_1 - sum of squared concurrences
    concurrence_product  C2 of one site pair times C2 of another pair of
                         the same 4-qubit state (the 2|2 bipartition bounds)
- Negative raw spin-flip values mean "no entanglement of this kind" and are
  reported as 0.

Where it runs: Imported only.
Inputs:  PureState / DensityMatrix from numkernel.
Outputs: floats in [0, 1].
Common failures + fixes:
  - ValueError "expects a N-qubit state": pass a reduced state of the right
    size (partial_trace / reduced_state first).
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

from ..numkernel import DensityMatrix, PureState, partial_trace, spin_flip_operator
from .spinflip import spinflip_spectrum

IMAG_TOL = 1e-12

# 2|2 bipartitions of four qubits: (first pair, second pair), sites 0-based
BIPARTITIONS: dict[str, tuple[tuple[int, int], tuple[int, int]]] = {
    "12_34": ((0, 1), (2, 3)),
    "13_24": ((0, 2), (1, 3)),
    "14_23": ((0, 3), (1, 2)),
}


def _require_qubits(n_found: int, n_expected: int, what: str) -> None:
    if n_found != n_expected:
        raise ValueError(f"{what} expects a {n_expected}-qubit state, got {n_found} qubits.")


def preconcurrence(psi: PureState) -> complex:
    """<psi*| S |psi> = psi^T S psi with S = sigma_y on every qubit (signed, complex)."""
    amps = psi.amplitudes
    return complex(amps @ (spin_flip_operator(psi.n_qubits) @ amps))


def fourtangle_pure(psi: PureState) -> float:
    _require_qubits(psi.n_qubits, 4, "fourtangle_pure")
    return abs(preconcurrence(psi))


def concurrence_pure(psi: PureState) -> float:
    _require_qubits(psi.n_qubits, 2, "concurrence_pure")
    return abs(preconcurrence(psi))


def fourtangle_mixed(rho: DensityMatrix) -> float:
    _require_qubits(rho.n_qubits, 4, "fourtangle_mixed")
    return max(0.0, spinflip_spectrum(rho).raw())


def concurrence(rho: DensityMatrix) -> float:
    _require_qubits(rho.n_qubits, 2, "concurrence")
    return max(0.0, spinflip_spectrum(rho).raw())


def one_tangle(rho1: DensityMatrix) -> float:
    _require_qubits(rho1.n_qubits, 1, "one_tangle")
    det = complex(np.linalg.det(rho1.matrix))
    if abs(det.imag) > IMAG_TOL:
        raise ValueError(f"det(rho_1) has imaginary part {det.imag:.3e}; rho_1 is not Hermitian.")
    return 4.0 * det.real


def residual_tangle(tau1: float, concurrences: Iterable[float]) -> float:
    return float(tau1) - float(sum(c * c for c in concurrences))


def concurrence_product(
    rho: DensityMatrix,
    first: Sequence[int] = (0, 1),
    second: Sequence[int] = (2, 3),
) -> float:
    """C2 of `first` times C2 of `second` for two disjoint site pairs of `rho`."""
    _require_qubits(rho.n_qubits, 4, "concurrence_product")
    return concurrence(partial_trace(rho, sorted(first))) * concurrence(
        partial_trace(rho, sorted(second))
    )


def bipartition_products(rho: DensityMatrix) -> dict[str, float]:
    """Concurrence products for all three 2|2 bipartitions, keyed '12_34', '13_24', '14_23'."""
    return {
        key: concurrence_product(rho, first, second)
        for key, (first, second) in BIPARTITIONS.items()
    }
