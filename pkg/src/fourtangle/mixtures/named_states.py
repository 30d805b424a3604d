"""
INSTRUCTION HEADER

What this file does (plain English):
- named_state(tag) returns the fixed PureStates the mixture families are
  built from. Kets use the package bit order (qubit 0 leftmost):
    GHZ4          (|0000> + |1111>)/sqrt2
    GHZ4prime     (|0100> + |1011>)/sqrt2
    W4            (|1000> + |0100> + |0010> + |0001>)/2
    PhiPlus       (|11> + |00>)/sqrt2
    PhiMinus      (|11> - |00>)/sqrt2
    PsiPlus       (|10> + |01>)/sqrt2
    PsiMinus      (|10> - |01>)/sqrt2
    PhiPlusPhase  (|11> + e^{i phi}|00>)/sqrt2    (needs phi=...)
- bell_product(a, b) tensors two 2-qubit tags: `a` on sites (1,2), `b` on
  sites (3,4).

Where it runs: Imported only.
Common failures + fixes:
  - ValueError "Unknown state tag": use one of NAMED_TAGS.
"""

from __future__ import annotations

import numpy as np

from ..numkernel import PureState

_R2 = 1.0 / np.sqrt(2.0)

NAMED_TAGS = (
    "GHZ4",
    "GHZ4prime",
    "W4",
    "PhiPlus",
    "PhiMinus",
    "PsiPlus",
    "PsiMinus",
    "PhiPlusPhase",
)


def _ket(n_qubits: int, terms: dict[str, complex]) -> PureState:
    amps = np.zeros(1 << n_qubits, dtype=complex)
    for bits, coeff in terms.items():
        amps[int(bits, 2)] = coeff
    return PureState(n_qubits, amps)


def named_state(tag: str, phi: float | None = None) -> PureState:
    if tag == "PhiPlusPhase":
        if phi is None:
            raise ValueError("PhiPlusPhase needs a phase: named_state('PhiPlusPhase', phi=...).")
        return _ket(2, {"11": _R2, "00": _R2 * np.exp(1j * phi)})
    if phi is not None:
        raise ValueError(f"State tag {tag!r} takes no phase.")

    if tag == "GHZ4":
        return _ket(4, {"0000": _R2, "1111": _R2})
    if tag == "GHZ4prime":
        return _ket(4, {"0100": _R2, "1011": _R2})
    if tag == "W4":
        return _ket(4, {"1000": 0.5, "0100": 0.5, "0010": 0.5, "0001": 0.5})
    if tag == "PhiPlus":
        return _ket(2, {"11": _R2, "00": _R2})
    if tag == "PhiMinus":
        return _ket(2, {"11": _R2, "00": -_R2})
    if tag == "PsiPlus":
        return _ket(2, {"10": _R2, "01": _R2})
    if tag == "PsiMinus":
        return _ket(2, {"10": _R2, "01": -_R2})
    raise ValueError(f"Unknown state tag {tag!r}. Expected one of {', '.join(NAMED_TAGS)}.")


def bell_product(first: str, second: str, phi: float | None = None) -> PureState:
    """`first` on sites (1,2) and `second` on (3,4); `phi` applies to PhiPlusPhase factors."""

    def _pair(tag: str) -> PureState:
        state = named_state(tag, phi=phi if tag == "PhiPlusPhase" else None)
        if state.n_qubits != 2:
            raise ValueError(f"bell_product needs 2-qubit tags, got {tag!r}.")
        return state

    return _pair(first).kron(_pair(second))
