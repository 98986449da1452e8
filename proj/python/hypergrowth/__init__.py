"""Python access to the hypergrowth library."""

from ._hypergrowth import (
    Coloring,
    Error,
    binomial,
    contains,
    families,
    fibonacci,
    g_sequence,
    growth,
    is_c_simple,
    is_p_tame,
    is_r_rich,
    is_wealthy,
    make_rich,
    make_wealthy,
    nuclear_intervals,
    parse_coloring,
    restrict,
    reverse,
    sequence,
    spec_digest,
    verify,
)

__all__ = [
    "Coloring",
    "Error",
    "binomial",
    "contains",
    "families",
    "fibonacci",
    "g_sequence",
    "growth",
    "is_c_simple",
    "is_p_tame",
    "is_r_rich",
    "is_wealthy",
    "make_rich",
    "make_wealthy",
    "nuclear_intervals",
    "parse_coloring",
    "restrict",
    "reverse",
    "sequence",
    "spec_digest",
    "verify",
]
