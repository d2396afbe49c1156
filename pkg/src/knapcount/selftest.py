"""Seeded randomized self-check: counts vs brute force, solver vs DP."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .cayley import cayley_count, subinterval_table
from .oracle import brute_force_value_counts, dp_knapsack_max
from .solver import UkpInstance, augment_slack, solve_max_value, validate_instance

__all__ = ["SelftestResult", "random_instance", "run_selftest"]


@dataclass(frozen=True)
class SelftestResult:
    trials: int
    failed_trial: int | None = None
    detail: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return self.failed_trial is None


def random_instance(
    rng: random.Random,
    max_items: int = 4,
    max_component: int = 9,
    max_capacity: int = 30,
) -> UkpInstance:
    """Draw a valid instance; the rng state fully determines the outcome.

    Components are uniform on 1..max_component, rejection-sampled until
    the pair is coprime and its ratio unused.
    """
    wanted = rng.randint(1, max_items)
    items: list[tuple[int, int]] = []
    ratios: set[Fraction] = set()
    while len(items) < wanted:
        w = rng.randint(1, max_component)
        v = rng.randint(1, max_component)
        if gcd(w, v) != 1:
            continue
        ratio = Fraction(v, w)
        if ratio in ratios:
            continue
        ratios.add(ratio)
        items.append((w, v))
    return validate_instance(items, rng.randint(0, max_capacity))


def run_selftest(
    trials: int,
    seed: int,
    max_items: int = 4,
    max_component: int = 9,
    max_capacity: int = 30,
) -> SelftestResult:
    """Compare the reduction against brute force on random instances.

    Each trial checks every total value from 0 through three past the top
    breakpoint, then the solver against the classical DP.  Stops at the
    first mismatch and reports it with full reproduction data.
    """
    rng = random.Random(seed)
    for trial in range(1, trials + 1):
        instance = random_instance(rng, max_items, max_component, max_capacity)
        matrix = augment_slack(instance)
        capacity = instance.capacity
        top = subinterval_table(matrix, capacity).top
        reference = brute_force_value_counts(matrix, capacity)
        for value in range(top + 4):
            got = cayley_count(matrix, (capacity, value))
            want = reference.get(value, 0)
            if got != want:
                return _failure(
                    trial, seed, instance,
                    f"check=count target_value={value} cayley={got} brute_force={want}",
                )
        solver_max = solve_max_value(instance).max_value
        dp_max, _ = dp_knapsack_max(instance)
        if solver_max != dp_max:
            return _failure(
                trial, seed, instance,
                f"check=solve solver_max={solver_max} dp_max={dp_max}",
            )
    return SelftestResult(trials)


def _failure(trial: int, seed: int, instance: UkpInstance, line: str) -> SelftestResult:
    detail = (
        f"seed={seed}",
        "items=" + ";".join(f"{w},{v}" for w, v in instance.items),
        f"capacity={instance.capacity}",
        line,
    )
    return SelftestResult(trial, trial, detail)
