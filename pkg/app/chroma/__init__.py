from app.chroma.coloring import is_proper, verify_coloring
from app.chroma.enumerate import (
    canonical_leaf_estimate,
    count_colorings,
    enumerate_colorings,
    is_uniquely_colorable,
)
from app.chroma.solver import chi, chromatic_number, dsatur, is_k_colorable


__all__ = [
    "chi",
    "chromatic_number",
    "dsatur",
    "is_k_colorable",
    "is_proper",
    "verify_coloring",
    "enumerate_colorings",
    "count_colorings",
    "canonical_leaf_estimate",
    "is_uniquely_colorable",
]
