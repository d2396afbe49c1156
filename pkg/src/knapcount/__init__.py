"""Exact unbounded-knapsack solving built on two-row partition counting.

All arithmetic is exact: counts are plain Python integers, so they never
overflow or round.
"""

from .cayley import (
    Column,
    EliminationRow,
    GeneratorMatrix,
    NormalVector,
    SubintervalTable,
    Target,
    cayley_count,
    elimination_row,
    normal_vector,
    partial_sum,
    subinterval_table,
    term_breakdown,
    term_value,
)
from .partitions import count_nonneg, count_signed
from .selftest import SelftestResult, random_instance, run_selftest
from .solver import (
    DuplicateRatio,
    EmptyInstance,
    NegativeCapacity,
    NonCoprimeItem,
    SolveResult,
    UkpInstance,
    ValidationError,
    ZeroComponent,
    augment_slack,
    solve_max_value,
    validate_instance,
)

__version__ = "0.1.0"

__all__ = [
    "Column",
    "Target",
    "NormalVector",
    "EliminationRow",
    "GeneratorMatrix",
    "SubintervalTable",
    "count_nonneg",
    "count_signed",
    "normal_vector",
    "elimination_row",
    "term_value",
    "cayley_count",
    "term_breakdown",
    "subinterval_table",
    "partial_sum",
    "ValidationError",
    "EmptyInstance",
    "NegativeCapacity",
    "ZeroComponent",
    "NonCoprimeItem",
    "DuplicateRatio",
    "UkpInstance",
    "SolveResult",
    "validate_instance",
    "augment_slack",
    "solve_max_value",
    "SelftestResult",
    "random_instance",
    "run_selftest",
    "__version__",
]
