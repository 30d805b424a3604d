"""
INSTRUCTION HEADER

What this file does (plain English):
- Evaluates ground-state Pauli-string expectations on the free-fermion
  backend:
    1. each site label becomes a Majorana word (Jordan-Wigner string
       included, counted from the leftmost site of the string):
           Z_t = A_t B_t,  X_t = S A_t,  Y_t = i S B_t,
           S = prod over s0 <= l < t of A_l B_l
    2. the words are concatenated, sorted into canonical order (site
       ascending, A before B) with the permutation sign, and repeated
       generators cancelled (A^2 = 1, B^2 = -1)
    3. Wick's theorem: <g_1 ... g_2n> = Pf(C), C_ab = <g_a g_b> for a < b.
- Canonical monomials depend only on the relative sites and labels and are
  memoized.
- Symmetry filter: strings with an odd number of X+Y labels or an odd number
  of Y labels vanish in the even-parity ground state of the real
  Hamiltonian. They return exactly 0, but only after a one-time check that
  the unfiltered evaluation and exact diagonalization agree on them at six
  (lambda, gamma) points on an 8-site chain. If that check fails the filter
  stays off and every string is evaluated.

Where it runs: Imported by chain/rdm.py and chain/validate.py.
Common failures + fixes:
  - ValueError "labels": one label per site, each one of I, X, Y, Z.
  - ValueError "ascending": sort the sites first (and the labels with them).
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence
from functools import lru_cache

import numpy as np

from ..numkernel import pfaffian
from .freefermion import CorrelatorTable, ff_correlators
from .model import ChainConfig

logger = logging.getLogger(__name__)

FILTER_CHECK_POINTS = ((0.5, 1.0), (1.0, 1.0), (1.6, 1.0), (0.7, 0.5), (1.3, 0.5), (1.1, 0.2))
FILTER_CHECK_SITES = 8
FILTER_CHECK_TOL = 1e-8

_A, _B = 0, 1
Generator = tuple[int, int]


# ---------------------------------------------------------------------------
# Majorana monomials
# ---------------------------------------------------------------------------

def _site_word(rel: int, label: str) -> tuple[complex, list[Generator]]:
    if label == "I":
        return 1.0, []
    if label == "Z":
        return 1.0, [(rel, _A), (rel, _B)]
    string = [g for l in range(rel) for g in ((l, _A), (l, _B))]
    if label == "X":
        return 1.0, string + [(rel, _A)]
    if label == "Y":
        return 1j, string + [(rel, _B)]
    raise ValueError(f"Unknown Pauli label {label!r}; expected one of I, X, Y, Z.")


@lru_cache(maxsize=65536)
def majorana_monomial(rel_sites: tuple[int, ...], labels: str) -> tuple[complex, tuple[Generator, ...]]:
    """
    Canonical form of a Pauli string as coeff * g_1 g_2 ... g_m with the
    generators distinct and ordered (site ascending, A before B).
    """
    coeff: complex = 1.0
    word: list[Generator] = []
    for rel, label in zip(rel_sites, labels):
        c, w = _site_word(rel, label)
        coeff *= c
        word.extend(w)

    inversions = 0
    for i in range(len(word)):
        for j in range(i + 1, len(word)):
            if word[i] > word[j]:
                inversions += 1
    if inversions % 2:
        coeff = -coeff
    word.sort()

    out: list[Generator] = []
    for gen, group in itertools.groupby(word):
        count = len(list(group))
        if gen[1] == _B and (count // 2) % 2:
            coeff = -coeff
        if count % 2:
            out.append(gen)
    return coeff, tuple(out)


def _check_string(sites: Sequence[int], labels: str, n_sites: int) -> tuple[int, ...]:
    sites = tuple(int(s) for s in sites)
    if len(sites) != len(labels):
        raise ValueError(f"Got {len(sites)} sites but {len(labels)} labels ({labels!r}).")
    if any(b <= a for a, b in zip(sites, sites[1:])):
        raise ValueError(f"Sites must be strictly ascending, got {sites}.")
    if sites and (sites[0] < 0 or sites[-1] >= n_sites):
        raise ValueError(f"Sites {sites} out of range for N={n_sites}.")
    bad = set(labels) - set("IXYZ")
    if bad:
        raise ValueError(f"Unknown Pauli labels {sorted(bad)} in {labels!r}.")
    return sites


def is_symmetry_zero(labels: str) -> bool:
    n_y = labels.count("Y")
    return (labels.count("X") + n_y) % 2 == 1 or n_y % 2 == 1


# ---------------------------------------------------------------------------
# Wick evaluation
# ---------------------------------------------------------------------------

def pauli_expectation_complex(table: CorrelatorTable, sites: Sequence[int], labels: str) -> complex:
    """Unfiltered Wick value; imaginary parts only appear for symmetry-zero strings."""
    sites = _check_string(sites, labels, table.n_sites)
    if not sites:
        return 1.0 + 0.0j
    s0 = sites[0]
    coeff, gens = majorana_monomial(tuple(s - s0 for s in sites), labels)
    m = len(gens)
    if m == 0:
        return complex(coeff)
    if m % 2:
        return 0.0j
    absolute = [(s0 + site, kind) for site, kind in gens]
    c = np.zeros((m, m))
    for a in range(m):
        for b in range(a + 1, m):
            value = table.contraction(absolute[a], absolute[b])
            c[a, b] = value
            c[b, a] = -value
    return complex(coeff) * pfaffian(c)


def pauli_expectation(
    table: CorrelatorTable,
    sites: Sequence[int],
    labels: str,
    use_filter: bool | None = None,
) -> float:
    if use_filter is None:
        use_filter = symmetry_filter_enabled()
    if use_filter:
        _check_string(sites, labels, table.n_sites)
        if is_symmetry_zero(labels):
            return 0.0
    return float(pauli_expectation_complex(table, sites, labels).real)


# ---------------------------------------------------------------------------
# One-time filter check against exact diagonalization
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1)
def symmetry_filter_enabled() -> bool:
    from .exact import ed_ground_state, ed_pauli_expectation

    n = FILTER_CHECK_SITES
    sites = tuple(range((n - 4) // 2, (n - 4) // 2 + 4))
    strings = ["".join(p) for p in itertools.product("IXYZ", repeat=4) if is_symmetry_zero("".join(p))]
    worst = 0.0
    for lam, gamma in FILTER_CHECK_POINTS:
        table = ff_correlators(ChainConfig(lam, gamma, n, backend="freefermion"))
        psi = ed_ground_state(ChainConfig(lam, gamma, n, backend="ed"))
        for labels in strings:
            ff = abs(pauli_expectation_complex(table, sites, labels))
            ed = abs(ed_pauli_expectation(psi, sites, labels))
            worst = max(worst, ff, ed)
    if worst > FILTER_CHECK_TOL:
        logger.warning(
            "Symmetry filter disabled: a symmetry-zero Pauli string reached %.3e "
            "(tolerance %.0e); evaluating every string.",
            worst, FILTER_CHECK_TOL,
        )
        return False
    logger.debug("Symmetry filter enabled (largest symmetry-zero value %.2e).", worst)
    return True
