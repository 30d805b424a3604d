"""
INSTRUCTION HEADER

What this package does (plain English):
- Entanglement measures: spin-flip spectrum, 4-tangle, concurrence,
  one-tangle and residual tangle.

Where it runs: Imported only.
"""

from .spinflip import SpinFlipSpectrum, spinflip_spectrum
from .tangles import (
    BIPARTITIONS,
    bipartition_products,
    concurrence,
    concurrence_product,
    concurrence_pure,
    fourtangle_mixed,
    fourtangle_pure,
    one_tangle,
    preconcurrence,
    residual_tangle,
)

__all__ = [
    "BIPARTITIONS",
    "SpinFlipSpectrum",
    "bipartition_products",
    "concurrence",
    "concurrence_product",
    "concurrence_pure",
    "fourtangle_mixed",
    "fourtangle_pure",
    "one_tangle",
    "preconcurrence",
    "residual_tangle",
    "spinflip_spectrum",
]
