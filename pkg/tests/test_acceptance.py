"""End-to-end acceptance checks with per-criterion pass lines and time caps.

Each test prints one ``criterion <n> (<label>): PASS/FAIL`` line (visible
with ``pytest -s``) and fails when its runtime cap is exceeded.
"""

import random
import subprocess
import sys
import time
from contextlib import contextmanager

import pytest

from helpers import build_signed_series
from knapcount import (
    augment_slack,
    cayley_count,
    count_nonneg,
    count_signed,
    elimination_row,
    solve_max_value,
    subinterval_table,
    term_breakdown,
    validate_instance,
)
from knapcount.oracle import (
    brute_force_scalar_count,
    brute_force_vector_count,
    dp_knapsack_max,
)
from knapcount.selftest import random_instance

CORPUS_SEED = 20260815
SCALAR_SEED = 271828
SIGNED_SEED = 31415

DEMO_TEXT = "capacity: 10\nitem: 4 1\nitem: 7 3\nitem: 5 3\n"


@contextmanager
def criterion(number, label, limit_seconds):
    started = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"criterion {number} ({label}): FAIL")
        raise
    elapsed = time.perf_counter() - started
    if elapsed >= limit_seconds:
        print(f"criterion {number} ({label}): FAIL [took {elapsed:.2f}s, cap {limit_seconds}s]")
        raise AssertionError(
            f"criterion {number} took {elapsed:.2f}s, cap {limit_seconds}s"
        )
    print(f"criterion {number} ({label}): PASS [{elapsed:.2f}s, cap {limit_seconds}s]")


@pytest.fixture(scope="module")
def corpus():
    rng = random.Random(CORPUS_SEED)
    return [random_instance(rng) for _ in range(500)]


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "knapcount", *args],
        capture_output=True,
        text=True,
    )


def test_criterion_1_demo_instance_end_to_end(tmp_path):
    with criterion(1, "demo instance end to end", 1.0):
        path = tmp_path / "demo.txt"
        path.write_text(DEMO_TEXT)
        instance = validate_instance([(4, 1), (7, 3), (5, 3)], 10)
        matrix = augment_slack(instance)

        done = run_cli("solve", str(path))
        assert done.returncode == 0
        assert done.stdout == "max_value=6\nfound_in_subinterval=3\n"
        assert dp_knapsack_max(instance)[0] == 6

        done = run_cli("count", str(path), "--total-value", "6")
        assert done.returncode == 0
        assert done.stdout == "count=1\n"
        assert brute_force_vector_count(matrix, (10, 6)) == 1

        done = run_cli("count", str(path), "--total-value", "7")
        assert done.returncode == 0
        assert done.stdout == "count=0\n"
        assert brute_force_vector_count(matrix, (10, 7)) == 0

        done = run_cli("breakdown", str(path), "--total-value", "2")
        assert done.returncode == 0
        assert done.stdout == "term[0]=0\nterm[1]=0\nterm[2]=-1\nterm[3]=2\ncount=1\n"
        assert brute_force_vector_count(matrix, (10, 2)) == 1


def test_criterion_2_reduction_equals_brute_force(corpus):
    with criterion(2, "reduction equals brute force on 500 instances", 60.0):
        for instance in corpus:
            matrix = augment_slack(instance)
            capacity = instance.capacity
            top = subinterval_table(matrix, capacity).top
            for value in range(top + 4):
                expected = brute_force_vector_count(matrix, (capacity, value))
                got = cayley_count(matrix, (capacity, value))
                assert got == expected, (
                    f"items={instance.items} capacity={capacity} value={value} "
                    f"cayley={got} brute_force={expected}"
                )


def test_criterion_3_solver_equals_classical_dp(corpus):
    with criterion(3, "solver equals classical dp on 500 instances", 30.0):
        for instance in corpus:
            got = solve_max_value(instance).max_value
            expected = dp_knapsack_max(instance)[0]
            assert got == expected, (
                f"items={instance.items} capacity={instance.capacity} "
                f"solver={got} dp={expected}"
            )


def test_criterion_4_vanishing_region_is_exact(corpus):
    with criterion(4, "counts and every term vanish above the top bound", 30.0):
        for instance in corpus:
            matrix = augment_slack(instance)
            top = subinterval_table(matrix, instance.capacity).top
            for value in range(top + 1, top + 4):
                breakdown = term_breakdown(matrix, (instance.capacity, value))
                assert all(term == 0 for _, term in breakdown), (
                    f"items={instance.items} capacity={instance.capacity} value={value}"
                )
                assert cayley_count(matrix, (instance.capacity, value)) == 0


def test_criterion_5_scalar_dp_equals_enumeration_with_scaling():
    rng = random.Random(SCALAR_SEED)
    generator_lists = [
        [rng.randint(1, 12) for _ in range(rng.randint(1, 4))] for _ in range(200)
    ]
    with criterion(5, "scalar dp equals enumeration, scaling invariant", 10.0):
        for d in generator_lists:
            for s in range(61):
                expected = brute_force_scalar_count(s, d)
                assert count_nonneg(s, d) == expected, f"d={d} s={s}"
                for lam in (2, 3):
                    scaled = count_nonneg(lam * s, [lam * g for g in d])
                    assert scaled == expected, f"d={d} s={s} lam={lam}"


def test_criterion_6_row_sign_structure(corpus):
    with criterion(6, "row sign pattern and antisymmetry", 30.0):
        for instance in corpus:
            matrix = augment_slack(instance)
            target = (instance.capacity, 0)
            rows = [elimination_row(matrix, j, target) for j in range(matrix.m + 1)]
            for j, row in enumerate(rows):
                for i in range(matrix.m + 1):
                    if i == j:
                        continue
                    entry = row.d[i if i < j else i - 1]
                    mirror = rows[i].d[j if j < i else j - 1]
                    assert (entry > 0) == (i < j), f"items={instance.items} i={i} j={j}"
                    assert (entry < 0) == (i > j), f"items={instance.items} i={i} j={j}"
                    assert entry == -mirror, f"items={instance.items} i={i} j={j}"


def test_criterion_7_sign_flip_rule_matches_series_product():
    rng = random.Random(SIGNED_SEED)
    generator_lists = []
    for _ in range(200):
        size = rng.randint(1, 4)
        entries = [rng.randint(1, 12) * rng.choice((1, -1)) for _ in range(size)]
        flip = rng.randrange(size)
        entries[flip] = -abs(entries[flip])
        generator_lists.append(entries)
    with criterion(7, "negative-generator rule equals series coefficients", 30.0):
        for d in generator_lists:
            degree = 60 + sum(abs(g) for g in d)
            series, sign, shift = build_signed_series(d, degree)
            for l in range(-15, 61):
                exponent = l - shift
                reference = sign * series[exponent] if 0 <= exponent <= degree else 0
                assert count_signed(l, d) == reference, f"d={d} l={l}"
