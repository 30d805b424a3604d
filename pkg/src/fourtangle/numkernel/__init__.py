"""
INSTRUCTION HEADER

What this package does (plain English):
- Numerical kernel shared by every other subpackage: state carriers
  (states.py), small dense linear algebra (linalg.py) and the Pfaffian
  (pfaffian.py).

Where it runs: Imported only.
"""

from .linalg import (
    PAULI,
    herm_eig,
    kron,
    partial_trace,
    pauli_string,
    psd_sqrt,
    reduced_state,
    spin_flip_operator,
)
from .pfaffian import pfaffian
from .states import DensityMatrix, NumericalError, PureState

__all__ = [
    "PAULI",
    "DensityMatrix",
    "NumericalError",
    "PureState",
    "herm_eig",
    "kron",
    "partial_trace",
    "pauli_string",
    "pfaffian",
    "psd_sqrt",
    "reduced_state",
    "spin_flip_operator",
]
