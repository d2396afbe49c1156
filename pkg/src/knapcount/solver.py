"""Unbounded knapsack solving through solution counting.

A validated instance's items become the matrix columns 1..m, ratio-sorted
behind the unit-weight slack column that absorbs unused capacity.  Candidate
total values are scanned downward from the largest reachable one; within
subinterval j only the row terms j..m can be nonzero, so each probe
evaluates exactly that partial sum.  The first candidate with a positive
solution count is the optimum.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cayley import (
    Column,
    GeneratorMatrix,
    cayley_count,
    elimination_row,
    partial_sum,
    subinterval_table,
    term_value,
)

__all__ = [
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
]


class ValidationError(ValueError):
    """The raw input violates a condition the reduction requires."""


class EmptyInstance(ValidationError):
    """No items were given."""


class NegativeCapacity(ValidationError):
    """The capacity is below zero."""


class ZeroComponent(ValidationError):
    """An item has a nonpositive weight or value."""


class NonCoprimeItem(ValidationError):
    """An item's weight and value share a factor."""


class DuplicateRatio(ValidationError):
    """Two distinct items are collinear."""


@dataclass(frozen=True)
class UkpInstance:
    """Validated instance: items sorted by increasing value/weight ratio."""

    items: tuple[Column, ...]
    capacity: int


@dataclass(frozen=True)
class SolveResult:
    max_value: int
    subinterval_found: int | None
    count_at_max: int
    probes: int  # number of candidate values the scan evaluated


def validate_instance(items, capacity) -> UkpInstance:
    """Check, deduplicate and ratio-sort raw (weight, value) pairs.

    Raises the `ValidationError` subclass naming the first violated
    condition.  Exact duplicate items are dropped with a warning; distinct
    coprime items can never share a ratio, so deduplication also preserves
    the strict ratio ordering the reduction needs.
    """
    if not isinstance(capacity, int):
        raise TypeError("capacity must be an integer")
    if capacity < 0:
        raise NegativeCapacity(f"capacity must be nonnegative, got {capacity}")
    raw = [Column(w, v) for (w, v) in items]
    if not raw:
        raise EmptyInstance("an instance needs at least one item")
    kept: list[Column] = []
    seen: set[Column] = set()
    for item in raw:
        w, v = item
        if not (isinstance(w, int) and isinstance(v, int)):
            raise TypeError(f"item components must be integers, got {item!r}")
        if w < 1 or v < 1:
            raise ZeroComponent(f"item {tuple(item)}: weight and value must be positive")
        if gcd(w, v) != 1:
            raise NonCoprimeItem(f"item {tuple(item)}: weight and value must be coprime")
        if item in seen:
            warnings.warn(f"duplicate item {tuple(item)} dropped", stacklevel=2)
            continue
        seen.add(item)
        kept.append(item)
    kept.sort(key=lambda it: Fraction(it.value, it.weight))
    for a, b in zip(kept, kept[1:]):
        if a.value * b.weight == b.value * a.weight:
            # unreachable once items are coprime and deduplicated; kept as a guard
            raise DuplicateRatio(f"items {tuple(a)} and {tuple(b)} are collinear")
    return UkpInstance(tuple(kept), capacity)


def augment_slack(instance: UkpInstance) -> GeneratorMatrix:
    """Prefix the unit-weight, zero-value slack column."""
    return GeneratorMatrix((Column(1, 0), *instance.items))


def solve_max_value(instance: UkpInstance, lazy: bool = False) -> SolveResult:
    """Largest total value with at least one packing, by descending scan.

    Returns the optimum, the subinterval it was found in (None when not
    even a single item fits), the exact number of optimal packings and the
    number of candidates probed.  With ``lazy=True`` the terms of a probe
    are accumulated from row m downward and the final row is skipped
    whenever nonnegativity of the total already settles the probe; results
    are identical either way.
    """
    matrix = augment_slack(instance)
    table = subinterval_table(matrix, instance.capacity)
    bounds = table.bounds
    probes = 0
    for j in range(matrix.m, 0, -1):
        for value in range(bounds[j], bounds[j - 1], -1):
            probes += 1
            target = (instance.capacity, value)
            if lazy:
                positive = _probe_positive_lazy(matrix, target, j)
                count = partial_sum(matrix, target, j) if positive else 0
            else:
                count = partial_sum(matrix, target, j)
                positive = count > 0
            if positive:
                return SolveResult(value, j, count, probes)
    fallback = cayley_count(matrix, (instance.capacity, 0))
    return SolveResult(0, None, fallback, probes)


def _probe_positive_lazy(matrix: GeneratorMatrix, target, j: int) -> bool:
    """Accumulate the row terms m..j, skipping row j when it cannot matter.

    Row signs alternate, so only the final row has a known-sign remainder:
    a positive running sum before a nonnegative final row stays positive,
    and a nonpositive running sum before a nonpositive final row forces a
    zero total (the total is a count, never negative).  No stronger
    prefix-based exit is taken.
    """
    acc = 0
    for k in range(matrix.m, j, -1):
        acc += term_value(elimination_row(matrix, k, target))
    final_sign_positive = (matrix.m - j) % 2 == 0
    if final_sign_positive:
        if acc > 0:
            return True
    elif acc <= 0:
        return False
    acc += term_value(elimination_row(matrix, j, target))
    return acc > 0
