"""
INSTRUCTION HEADER

What this file does (plain English):
- pfaffian(A): Pfaffian of a real antisymmetric matrix of even size.
- Validation happens here; the elimination itself is pfapack's Parlett-Reid
  tridiagonalization with partial pivoting (method "P"), O(n^3).
- Sign convention: Pf([[0, a], [-a, 0]]) = a, and for 4x4
  Pf = a01*a23 - a02*a13 + a03*a12.

Where it runs: Imported only (chain/wick.py evaluates every Wick
contraction through it).
Common failures + fixes:
  - ValueError "odd size": a Majorana word with an odd number of operators
    has zero expectation; callers should not build its matrix.
  - ValueError "not antisymmetric": the contraction matrix was filled on one
    triangle only; fill M[b, a] = -M[a, b].
"""

from __future__ import annotations

import numpy as np
from pfapack import pfaffian as _pfapack

ANTISYM_TOL = 1e-12


def pfaffian(a: np.ndarray) -> float:
    a = np.asarray(a)
    if np.iscomplexobj(a):
        if np.any(a.imag != 0.0):
            raise ValueError("pfaffian expects a real matrix; got non-zero imaginary entries.")
        a = a.real
    a = np.array(a, dtype=float, copy=True)
    if a.size == 0:
        return 1.0
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"pfaffian expects a square matrix, got shape {a.shape}.")
    n = a.shape[0]
    if n % 2 == 1:
        raise ValueError(f"pfaffian needs an even-size matrix, got odd size {n}.")

    scale = float(np.max(np.abs(a)))
    asym = float(np.max(np.abs(a + a.T)))
    if asym > ANTISYM_TOL * max(scale, 1.0e-300):
        raise ValueError(
            f"Matrix is not antisymmetric: max |A + A^T| = {asym:.3e} "
            f"(largest entry {scale:.3e})."
        )
    if scale == 0.0:
        return 0.0
    # pfapack asserts exact antisymmetry to 1e-14 absolute
    a = 0.5 * (a - a.T)
    return float(_pfapack.pfaffian(a, overwrite_a=True, method="P"))
