"""
INSTRUCTION HEADER

What this file does (plain English):
- ChainConfig: one point of the open transverse XY chain
      H = -lambda sum_i [ (1+gamma)/2 X_i X_{i+1} + (1-gamma)/2 Y_i Y_{i+1} ]
          - sum_i Z_i
  with Pauli operators, open boundary, sites 0..N-1. gamma = 1 is Ising.
  In this normalization the critical coupling is lambda_c = 1 and the
  factorizing field is lambda_f = (1 - gamma^2)^(-1/2).
- SiteQuad: four sites with gaps (n1, n2, n3), placed centered in the chain.
- factorizing_field / critical_coupling.

Where it runs: Imported only.
Common failures + fixes:
  - ValueError "ed backend": exact diagonalization is limited to N <= 14;
    use backend="freefermion" for longer chains.
  - ValueError "does not fit": the quad span must be smaller than N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..config.schema import BACKENDS

ED_MAX_SITES = 14


@dataclass(frozen=True)
class ChainConfig:
    lam: float
    gamma: float
    n_sites: int
    backend: str = "freefermion"
    boundary: str = "open"

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", float(self.lam))
        object.__setattr__(self, "gamma", float(self.gamma))
        object.__setattr__(self, "n_sites", int(self.n_sites))
        if not math.isfinite(self.lam) or self.lam < 0.0:
            raise ValueError(f"Coupling lambda must be finite and >= 0, got {self.lam!r}.")
        if not 0.0 <= self.gamma <= 1.0:
            raise ValueError(f"Anisotropy gamma must lie in [0, 1], got {self.gamma!r}.")
        if self.n_sites < 2:
            raise ValueError(f"Chain needs at least 2 sites, got N={self.n_sites}.")
        if self.backend not in BACKENDS:
            raise ValueError(f"Unknown backend {self.backend!r}. Expected one of {BACKENDS}.")
        if self.boundary != "open":
            raise ValueError(f"Only open boundary conditions are supported, got {self.boundary!r}.")
        if self.backend == "ed" and self.n_sites > ED_MAX_SITES:
            raise ValueError(
                f"ed backend is limited to N <= {ED_MAX_SITES}, got N={self.n_sites}; "
                "use backend='freefermion'."
            )

    def with_sites(self, n_sites: int, backend: str | None = None) -> "ChainConfig":
        return ChainConfig(self.lam, self.gamma, n_sites, backend or self.backend, self.boundary)

    def central_site(self) -> int:
        return (self.n_sites - 1) // 2


@dataclass(frozen=True)
class SiteQuad:
    n1: int
    n2: int
    n3: int

    def __post_init__(self) -> None:
        for name in ("n1", "n2", "n3"):
            value = getattr(self, name)
            if int(value) != value or value < 1:
                raise ValueError(f"Quad distance {name} must be a positive integer, got {value!r}.")
            object.__setattr__(self, name, int(value))

    @classmethod
    def parse(cls, text: str) -> "SiteQuad":
        parts = [p.strip() for p in str(text).split(",")]
        if len(parts) != 3:
            raise ValueError(f"Quad must be three comma-separated distances like '1,2,1', got {text!r}.")
        try:
            return cls(*(int(p) for p in parts))
        except ValueError:
            raise ValueError(f"Quad distances must be integers, got {text!r}.") from None

    @property
    def distances(self) -> tuple[int, int, int]:
        return (self.n1, self.n2, self.n3)

    @property
    def span(self) -> int:
        return self.n1 + self.n2 + self.n3

    def label(self) -> str:
        return f"{self.n1},{self.n2},{self.n3}"

    def sites_from(self, first: int) -> tuple[int, int, int, int]:
        return (
            first,
            first + self.n1,
            first + self.n1 + self.n2,
            first + self.span,
        )

    def centered_sites(self, n_sites: int) -> tuple[int, int, int, int]:
        if self.span >= n_sites:
            raise ValueError(f"Quad ({self.label()}) with span {self.span} does not fit in N={n_sites}.")
        return self.sites_from((n_sites - 1 - self.span) // 2)


def critical_coupling() -> float:
    return 1.0


def factorizing_field(gamma: float) -> float:
    """(1 - gamma^2)^(-1/2); infinite for the Ising chain."""
    gamma = float(gamma)
    if not 0.0 <= gamma <= 1.0:
        raise ValueError(f"Anisotropy gamma must lie in [0, 1], got {gamma!r}.")
    if gamma == 1.0:
        return math.inf
    return 1.0 / math.sqrt(1.0 - gamma * gamma)
