"""
INSTRUCTION HEADER

What this package does (plain English):
- Named 4-qubit states and their rank-2 / rank-3 mixture families, with
  C4 and concurrence-product evaluators.

Where it runs: Imported only.
"""

from .families import (
    FAMILIES,
    MixtureFamily,
    default_grid,
    find_product_zeros,
    get_family,
    mix,
    rank2_curve,
    rank2_point,
    rank3_point,
    rank3_surface,
)
from .named_states import NAMED_TAGS, bell_product, named_state

__all__ = [
    "FAMILIES",
    "NAMED_TAGS",
    "MixtureFamily",
    "bell_product",
    "default_grid",
    "find_product_zeros",
    "get_family",
    "mix",
    "named_state",
    "rank2_curve",
    "rank2_point",
    "rank3_point",
    "rank3_surface",
]
