"""Shortest sliding-token reconfiguration on proper interval graphs,
trivially perfect graphs and caterpillars."""

from ._slidetok import (
    ParseError,
    SolverError,
    classify,
    crosscheck,
    find_strong_twins,
    generate,
    oracle,
    recognize_caterpillar,
    solve,
    validate,
)

__all__ = [
    "ParseError",
    "SolverError",
    "classify",
    "crosscheck",
    "find_strong_twins",
    "generate",
    "oracle",
    "recognize_caterpillar",
    "solve",
    "validate",
]
