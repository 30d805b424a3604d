"""
INSTRUCTION HEADER

What this file does (plain English):
- cross_validate(cfg, quad): runs both chain backends on the same short
  chain and returns the largest |ED - free fermion| over all 256 Pauli
  expectations on the quad's (centered) sites.
- oracle_gate(...): the check every free-fermion chain sweep passes first.
  It cross-validates at the sweep's gamma on a 10-site chain for quads
  (1,1,1) and (1,2,1) at the given lambdas and raises NumericalError when
  any deviation exceeds 1e-8.

Where it runs: Imported by sweep/runner.py, the CLI `validate` command and
tools/verify/verify_backends.py.
Common failures + fixes:
  - NumericalError "oracle gate failed": the two backends disagree; do not
    trust chain results until the sign conventions are fixed.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable

from ..numkernel import NumericalError
from .exact import ed_ground_state, ed_pauli_expectation
from .freefermion import ff_correlators
from .model import ChainConfig, SiteQuad
from .rdm import pauli_basis
from .wick import pauli_expectation

logger = logging.getLogger(__name__)

ORACLE_TOL = 1e-8
ORACLE_SITES = 10
ORACLE_QUADS = (SiteQuad(1, 1, 1), SiteQuad(1, 2, 1))


def cross_validate(cfg: ChainConfig, quad: SiteQuad, use_cache: bool = True) -> float:
    n = cfg.n_sites
    sites = quad.centered_sites(n)
    psi = ed_ground_state(cfg.with_sites(n, backend="ed"))
    table = ff_correlators(cfg.with_sites(n, backend="freefermion"), use_cache=use_cache)
    worst = 0.0
    for labels, _ in pauli_basis(4):
        ed = ed_pauli_expectation(psi, sites, labels)
        ff = pauli_expectation(table, sites, labels)
        worst = max(worst, abs(ed - ff))
    logger.debug(
        "cross_validate lambda=%g gamma=%g N=%d quad=(%s): %.2e",
        cfg.lam, cfg.gamma, n, quad.label(), worst,
    )
    return worst


def oracle_gate(
    gamma: float,
    lambdas: Iterable[float],
    n_sites: int = ORACLE_SITES,
    quads: Iterable[SiteQuad] = ORACLE_QUADS,
    tol: float = ORACLE_TOL,
) -> float:
    worst = 0.0
    quads = tuple(quads)
    for lam in lambdas:
        cfg = ChainConfig(lam, gamma, n_sites, backend="ed")
        for quad in quads:
            dev = cross_validate(cfg, quad)
            if dev > tol:
                raise NumericalError(
                    f"oracle gate failed: ED and free fermions differ by {dev:.3e} "
                    f"(> {tol:g}) at lambda={lam:g}, gamma={gamma:g}, N={n_sites}, "
                    f"quad ({quad.label()})."
                )
            worst = max(worst, dev)
    return worst
