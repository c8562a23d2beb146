"""Exact recognizers, constructors and relation suites for discrete convexity classes.

Objects cross the boundary as plain dicts in the same wire format the CLI uses:
    set       {"dim": n, "points": [[...], ...]}
    function  {"dim": n, "entries": [{"x": [...], "v": "p/q"}, ...], "window": {...}?}
"""

from ._dcx import (
    argmin_set,
    binary_op,
    catalog_ids,
    classify,
    d_transform,
    describe,
    generate,
    paper_example,
    run_suite,
    set_composite_guard,
    set_max_dim,
    table_text,
)

__all__ = [
    "argmin_set",
    "binary_op",
    "catalog_ids",
    "classify",
    "d_transform",
    "describe",
    "generate",
    "paper_example",
    "run_suite",
    "set_composite_guard",
    "set_max_dim",
    "table_text",
]
