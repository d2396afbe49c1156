"""Counting lattice solutions of a two-row system by variable elimination.

A target pair (total weight, total value) and a slack-augmented column
matrix define the system ``target == sum(x[i] * column[i])`` over
nonnegative integer vectors ``x``.  Dotting both sides with the integer
normal of column j eliminates ``x[j]`` and leaves a single scalar equation
whose solution count is a signed scalar count (`partitions.count_signed`).
Summing the m + 1 eliminated forms gives the exact solution count of the
full system (Cayley's reduction): individual summands may be negative but
the total never is.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .partitions import count_signed

__all__ = [
    "Column",
    "Target",
    "NormalVector",
    "EliminationRow",
    "GeneratorMatrix",
    "SubintervalTable",
    "normal_vector",
    "elimination_row",
    "term_value",
    "cayley_count",
    "term_breakdown",
    "subinterval_table",
    "partial_sum",
]


class Column(NamedTuple):
    """One generator column: a (weight, value) pair."""

    weight: int
    value: int


class Target(NamedTuple):
    """Right-hand side of the system: total weight and total value."""

    weight: int
    value: int


class NormalVector(NamedTuple):
    x: int
    y: int


class EliminationRow(NamedTuple):
    """Scalar equation left after eliminating variable j.

    It reads ``l == sum over the other columns i of d[pos(i)] * x[i]`` where
    ``pos`` skips index j; entries keep the ascending column order.
    """

    j: int
    l: int
    d: tuple[int, ...]


@dataclass(frozen=True)
class GeneratorMatrix:
    """Slack-augmented columns, ratio-sorted; column 0 is the slack (1, 0).

    Construction enforces the class the reduction is valid for: integer
    columns with coprime components and strictly increasing value/weight
    ratios (which also rules out collinear columns).
    """

    columns: tuple[Column, ...]

    def __post_init__(self) -> None:
        cols = tuple(Column(w, v) for (w, v) in self.columns)
        object.__setattr__(self, "columns", cols)
        if len(cols) < 2:
            raise ValueError("matrix needs the slack column plus at least one item column")
        if cols[0] != (1, 0):
            raise ValueError(f"column 0 must be the slack column (1, 0), got {cols[0]!r}")
        previous = Fraction(0)
        for i, (w, v) in enumerate(cols):
            if not (isinstance(w, int) and isinstance(v, int)):
                raise TypeError(f"column {i} must hold integers, got {cols[i]!r}")
            if w < 1 or v < 0:
                raise ValueError(
                    f"column {i} must have positive weight and nonnegative value, got {cols[i]!r}"
                )
            if gcd(w, v) != 1:
                raise ValueError(f"column {i} components must be coprime, got {cols[i]!r}")
            ratio = Fraction(v, w)
            if i > 0 and ratio <= previous:
                raise ValueError("column value/weight ratios must increase strictly")
            previous = ratio

    @property
    def m(self) -> int:
        """Number of item columns (total columns minus the slack)."""
        return len(self.columns) - 1


@dataclass(frozen=True)
class SubintervalTable:
    """Value-axis breakpoints floor(capacity * value_j / weight_j) per column.

    Subinterval j covers the total values bounds[j-1]+1 .. bounds[j]; it is
    empty when the two breakpoints coincide.  Above bounds[-1] every
    solution count is zero.
    """

    bounds: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.bounds) - 1

    @property
    def top(self) -> int:
        """Largest total value any solution can reach."""
        return self.bounds[-1]

    def interval(self, j: int) -> tuple[int, int]:
        """Inclusive (low, high) limits of subinterval j; low > high if empty."""
        if not 1 <= j <= self.m:
            raise IndexError(f"subinterval index {j} out of range 1..{self.m}")
        return self.bounds[j - 1] + 1, self.bounds[j]

    def locate(self, value: int) -> int | None:
        """Index of the nonempty subinterval containing ``value``.

        None for values outside 1..top.
        """
        if value < 1 or value > self.top:
            return None
        return bisect_left(self.bounds, value)


def _as_target(s) -> tuple[int, int]:
    w, v = s
    if not (isinstance(w, int) and isinstance(v, int)):
        raise TypeError("target must be a pair of integers")
    if w < 0 or v < 0:
        raise ValueError("target components must be nonnegative")
    return w, v


def normal_vector(column) -> NormalVector:
    """Integer normal (value, -weight) of a column; their dot product is 0."""
    w, v = column
    if w == 0 and v == 0:
        raise ValueError("zero column has no normal direction")
    return NormalVector(v, -w)


def elimination_row(matrix: GeneratorMatrix, j: int, s) -> EliminationRow:
    """Dot the system with the normal of column j, eliminating x[j].

    Returns the scalar ``l = W*v_j - V*w_j`` together with the generators
    ``w_i*v_j - v_i*w_j`` of every other column i, in ascending i order.
    The ratio ordering makes the entry for i < j positive and for i > j
    negative; none can vanish.
    """
    columns = matrix.columns
    if not 0 <= j < len(columns):
        raise IndexError(f"column index {j} out of range 0..{len(columns) - 1}")
    total_weight, total_value = _as_target(s)
    wj, vj = columns[j]
    l = total_weight * vj - total_value * wj
    d = tuple(wi * vj - vi * wj for i, (wi, vi) in enumerate(columns) if i != j)
    return EliminationRow(j, l, d)


def term_value(row: EliminationRow) -> int:
    """Signed scalar count contributed by one elimination row."""
    return count_signed(row.l, row.d)


def cayley_count(matrix: GeneratorMatrix, s) -> int:
    """Exact number of nonnegative integer solutions of ``s == matrix @ x``.

    Sum of the m + 1 per-row signed counts; always nonnegative.
    """
    return sum(
        term_value(elimination_row(matrix, j, s)) for j in range(len(matrix.columns))
    )


def term_breakdown(matrix: GeneratorMatrix, s) -> list[tuple[int, int]]:
    """Per-row signed contributions (j, term); they sum to `cayley_count`."""
    return [
        (j, term_value(elimination_row(matrix, j, s)))
        for j in range(len(matrix.columns))
    ]


def subinterval_table(matrix: GeneratorMatrix, capacity: int) -> SubintervalTable:
    """Breakpoint table for scanning total values at the given capacity."""
    if not isinstance(capacity, int):
        raise TypeError("capacity must be an integer")
    if capacity < 0:
        raise ValueError("capacity must be nonnegative")
    return SubintervalTable(tuple(capacity * v // w for (w, v) in matrix.columns))


def partial_sum(matrix: GeneratorMatrix, s, j: int) -> int:
    """Sum of the row terms k = j..m only.

    For targets whose total value lies in subinterval j this equals
    `cayley_count`: every dropped row k < j contributes 0 there.
    """
    m = matrix.m
    if not 1 <= j <= m:
        raise IndexError(f"subinterval index {j} out of range 1..{m}")
    return sum(term_value(elimination_row(matrix, k, s)) for k in range(j, m + 1))
