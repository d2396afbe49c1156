"""Slow, trustworthy reference implementations used for cross-checking.

Everything here enumerates or tabulates directly from the defining
equations, independent of the elimination machinery, and fails loudly when
an input would exceed the enumeration budget.
"""

from __future__ import annotations

from math import prod

from .cayley import GeneratorMatrix
from .solver import UkpInstance

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "brute_force_scalar_count",
    "brute_force_vector_count",
    "brute_force_vector_solutions",
    "brute_force_value_counts",
    "dp_knapsack_max",
]

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """Enumeration would take more elementary steps than allowed."""


def _check_budget(estimate: int, budget: int) -> None:
    if estimate > budget:
        raise BudgetExceeded(f"estimated {estimate} steps exceed the budget of {budget}")


def _nonneg_pair(s) -> tuple[int, int]:
    w, v = s
    if w < 0 or v < 0:
        raise ValueError("target components must be nonnegative")
    return w, v


def brute_force_scalar_count(s: int, d, budget: int = DEFAULT_BUDGET) -> int:
    """Count vectors x >= 0 with ``s == sum(x[i] * d[i])`` by enumeration."""
    gens = sorted(d, reverse=True)  # largest stride first keeps the tree small
    if not gens or gens[-1] < 1:
        raise ValueError("generators must be positive")
    if s < 0:
        return 0
    _check_budget(prod(s // g + 1 for g in gens), budget)
    last = len(gens) - 1

    def walk(i: int, remaining: int) -> int:
        if i == last:
            return 1 if remaining % gens[i] == 0 else 0
        total = 0
        for used in range(0, remaining + 1, gens[i]):
            total += walk(i + 1, remaining - used)
        return total

    return walk(0, s)


def _range_product(items, total_weight: int, total_value: int) -> int:
    est = total_weight + 1  # slack variable range
    for w, v in items:
        est *= min(total_weight // w, total_value // v) + 1
    return est


def brute_force_vector_count(matrix: GeneratorMatrix, s, budget: int = DEFAULT_BUDGET) -> int:
    """Count solutions of the two-row system by bounded nested enumeration.

    Item variables are enumerated with both coordinates pruning the range;
    the slack column then absorbs whatever capacity remains, so a leaf is a
    solution exactly when the value coordinate is spent.
    """
    total_weight, total_value = _nonneg_pair(s)
    items = matrix.columns[1:]
    _check_budget(_range_product(items, total_weight, total_value), budget)
    last = len(items)

    def walk(i: int, rw: int, rv: int) -> int:
        if i == last:
            return 1 if rv == 0 else 0
        w, v = items[i]
        total = 0
        for take in range(min(rw // w, rv // v) + 1):
            total += walk(i + 1, rw - take * w, rv - take * v)
        return total

    return walk(0, total_weight, total_value)


def brute_force_vector_solutions(
    matrix: GeneratorMatrix, s, budget: int = DEFAULT_BUDGET
) -> list[tuple[int, ...]]:
    """All solution vectors, index-aligned with the matrix columns.

    Ordered lexicographically by the item coordinates (x1, ..., xm).
    """
    total_weight, total_value = _nonneg_pair(s)
    items = matrix.columns[1:]
    _check_budget(_range_product(items, total_weight, total_value), budget)
    last = len(items)
    solutions: list[tuple[int, ...]] = []

    def walk(i: int, rw: int, rv: int, acc: tuple[int, ...]) -> None:
        if i == last:
            if rv == 0:
                solutions.append((rw, *acc))
            return
        w, v = items[i]
        for take in range(min(rw // w, rv // v) + 1):
            walk(i + 1, rw - take * w, rv - take * v, acc + (take,))

    walk(0, total_weight, total_value, ())
    return solutions


def brute_force_value_counts(
    matrix: GeneratorMatrix, capacity: int, budget: int = DEFAULT_BUDGET
) -> dict[int, int]:
    """Histogram total value -> solution count at a fixed capacity, one sweep.

    Every item combination fitting the capacity is one solution (the slack
    absorbs the rest), tallied under its total value; values absent from
    the result have count 0.
    """
    if capacity < 0:
        raise ValueError("capacity must be nonnegative")
    items = matrix.columns[1:]
    _check_budget(prod(capacity // w + 1 for (w, _) in items), budget)
    counts: dict[int, int] = {}
    last = len(items)

    def walk(i: int, rw: int, value: int) -> None:
        if i == last:
            counts[value] = counts.get(value, 0) + 1
            return
        w, v = items[i]
        for take in range(rw // w + 1):
            walk(i + 1, rw - take * w, value + take * v)

    walk(0, capacity, 0)
    return counts


def dp_knapsack_max(instance: UkpInstance, budget: int = DEFAULT_BUDGET) -> tuple[int, tuple[int, ...]]:
    """Classical unbounded-knapsack table plus a deterministic witness.

    ``best[c]`` is the best item value at exactly weight c (-1 when weight c
    is unreachable); the answer maximizes over all c <= capacity and the
    slack absorbs the rest.  Backtracking prefers the lowest item index and
    starts from the smallest optimal weight, so identical instances give
    identical witnesses.  The witness is index-aligned with the
    slack-augmented columns.
    """
    capacity = instance.capacity
    items = instance.items
    _check_budget((capacity + 1) * len(items), budget)
    best = [-1] * (capacity + 1)
    best[0] = 0
    choice = [0] * (capacity + 1)
    for c in range(1, capacity + 1):
        top, pick = -1, 0
        for index, (w, v) in enumerate(items, start=1):
            if w <= c and best[c - w] >= 0 and best[c - w] + v > top:
                top, pick = best[c - w] + v, index
        best[c], choice[c] = top, pick
    max_value = max(best)
    c = best.index(max_value)
    witness = [0] * (len(items) + 1)
    witness[0] = capacity - c
    while c > 0:
        index = choice[c]
        witness[index] += 1
        c -= items[index - 1].weight
    return max_value, tuple(witness)
