"""Exact equiangular line sets.

Rational numbers cross the boundary as strings such as "1/5"; line indices
are 0-based.
"""

from ._core import (
    Error,
    LineSet,
    asche_72,
    check_saturated,
    extract_sublineset,
    from_graph6,
    generate_octads,
    known_bounds,
    max_clique,
    random_search,
    relative_bound,
    relative_bound_floor,
    span_closure,
    taylor_90,
    tremain_28,
    validate,
)

__all__ = [
    "Error",
    "LineSet",
    "asche_72",
    "check_saturated",
    "extract_sublineset",
    "from_graph6",
    "generate_octads",
    "known_bounds",
    "max_clique",
    "random_search",
    "relative_bound",
    "relative_bound_floor",
    "span_closure",
    "taylor_90",
    "tremain_28",
    "validate",
]
