"""Loose 3-path Ramsey toolkit for 3-uniform hypergraphs."""

from ._ramsey3 import (
    Falsification,
    InvalidInput,
    audit,
    bounds,
    complete_hypergraph,
    find_mono_path,
    find_pattern,
    lower_bound_coloring,
    purify,
    random_coloring,
    random_pfree,
    sat_decode,
    sat_export,
    threshold,
)

__all__ = [
    "Falsification",
    "InvalidInput",
    "audit",
    "bounds",
    "complete_hypergraph",
    "find_mono_path",
    "find_pattern",
    "lower_bound_coloring",
    "purify",
    "random_coloring",
    "random_pfree",
    "sat_decode",
    "sat_export",
    "threshold",
]
