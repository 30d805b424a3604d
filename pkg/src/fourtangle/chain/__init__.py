"""
INSTRUCTION HEADER

What this package does (plain English):
- Ground-state reduced states of the open transverse XY chain from two
  backends: exact diagonalization (short chains, the oracle) and free
  fermions (long chains, production), plus their cross-validation.

Where it runs: Imported only.
"""

from .exact import build_hamiltonian, ed_ground_energy, ed_ground_state, ed_pauli_expectation, ed_rdm
from .freefermion import CorrelatorTable, ff_correlators
from .model import ChainConfig, SiteQuad, critical_coupling, factorizing_field
from .rdm import ff_rdm, ff_rdm1, ff_rdm2, ff_rdm_sites, pauli_expectations
from .validate import cross_validate, oracle_gate
from .wick import pauli_expectation, symmetry_filter_enabled

__all__ = [
    "ChainConfig",
    "CorrelatorTable",
    "SiteQuad",
    "build_hamiltonian",
    "critical_coupling",
    "cross_validate",
    "ed_ground_energy",
    "ed_ground_state",
    "ed_pauli_expectation",
    "ed_rdm",
    "factorizing_field",
    "ff_correlators",
    "ff_rdm",
    "ff_rdm1",
    "ff_rdm2",
    "ff_rdm_sites",
    "oracle_gate",
    "pauli_expectation",
    "pauli_expectations",
    "symmetry_filter_enabled",
]
