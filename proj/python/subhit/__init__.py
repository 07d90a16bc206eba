"""Exact solvers for (colorful) H-subgraph hitting on graphs of small treewidth."""

from ._core import (
    ContractViolationError,
    ParseError,
    ResourceLimitError,
    UnsupportedPatternError,
    __version__,
    analyze,
    clean_3cnf,
    gen_colorful,
    gen_hh,
    gen_vc,
    is_clean,
    oracle,
    solve,
    treewidth,
)

__all__ = [
    "ContractViolationError",
    "ParseError",
    "ResourceLimitError",
    "UnsupportedPatternError",
    "__version__",
    "analyze",
    "clean_3cnf",
    "gen_colorful",
    "gen_hh",
    "gen_vc",
    "is_clean",
    "oracle",
    "solve",
    "treewidth",
]
