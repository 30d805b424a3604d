"""
INSTRUCTION HEADER

What this package does (plain English):
- fourtangle: the mixed-state 4-tangle, concurrence, one-tangle and residual
  tangle for (i) rank-2 / rank-3 mixtures of GHZ4, W4 and Bell-product states
  and (ii) reduced states of the open transverse XY chain ground state,
  plus sweeps that write the results as CSV.

Layout:
  numkernel/  state carriers, Jacobi eigensolver, PSD square root, Pfaffian
  measures/   spin-flip spectrum and the entanglement measures
  mixtures/   named states and mixture families
  chain/      exact-diagonalization and free-fermion backends
  config/     plan keys, CSV columns, plan files
  sweep/      sweep runner, CSV output, figure registry, CLI

Where it runs: Imported only. Put `src` on sys.path (the tools and tests do).
"""

__version__ = "0.1.0"
