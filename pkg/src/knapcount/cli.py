"""Command-line interface: solve, count, breakdown and selftest.

Instance files hold one ``capacity: <int>`` line and any number of
``item: <weight> <value>`` lines; ``#`` starts a comment and blank lines
are skipped.  All output is plain ``key=value`` text in full decimal.
Exit codes: 0 success, 1 domain or selftest failure, 2 I/O, parse or
usage failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .cayley import cayley_count, term_breakdown
from .selftest import run_selftest
from .solver import UkpInstance, ValidationError, augment_slack, solve_max_value, validate_instance

__all__ = ["InstanceParseError", "MalformedLine", "MissingCapacity", "parse_instance", "main", "entry"]


class InstanceParseError(Exception):
    """The instance file cannot be parsed."""


class MalformedLine(InstanceParseError):
    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no


class MissingCapacity(InstanceParseError):
    def __init__(self):
        super().__init__("no 'capacity:' line found")


def parse_instance(text: str) -> tuple[list[tuple[int, int]], int]:
    """Extract raw (weight, value) pairs and the capacity from file text."""
    items: list[tuple[int, int]] = []
    capacity: int | None = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise MalformedLine(line_no, "expected '<key>: <values>'")
        key = key.strip()
        if key == "capacity":
            if capacity is not None:
                raise MalformedLine(line_no, "duplicate capacity line")
            capacity = _int_tokens(rest, 1, line_no)[0]
        elif key == "item":
            weight, value = _int_tokens(rest, 2, line_no)
            items.append((weight, value))
        else:
            raise MalformedLine(line_no, f"unknown key {key!r}")
    if capacity is None:
        raise MissingCapacity()
    return items, capacity


def _int_tokens(rest: str, expected: int, line_no: int) -> list[int]:
    tokens = rest.split()
    if len(tokens) != expected:
        raise MalformedLine(line_no, f"expected {expected} integer token(s), got {len(tokens)}")
    values = []
    for token in tokens:
        try:
            values.append(int(token))
        except ValueError:
            raise MalformedLine(line_no, f"not an integer: {token!r}") from None
    return values


def _load_instance(path: str) -> UkpInstance:
    text = Path(path).read_text(encoding="utf-8")
    items, capacity = parse_instance(text)
    return validate_instance(items, capacity)


def _positive_int(token: str) -> int:
    value = int(token)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _nonneg_int(token: str) -> int:
    value = int(token)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return value


def _cmd_solve(args: argparse.Namespace) -> int:
    result = solve_max_value(_load_instance(args.file))
    print(f"max_value={result.max_value}")
    found = "none" if result.subinterval_found is None else str(result.subinterval_found)
    print(f"found_in_subinterval={found}")
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    instance = _load_instance(args.file)
    matrix = augment_slack(instance)
    total = cayley_count(matrix, (instance.capacity, args.total_value))
    print(f"count={total}")
    return 0


def _cmd_breakdown(args: argparse.Namespace) -> int:
    instance = _load_instance(args.file)
    matrix = augment_slack(instance)
    breakdown = term_breakdown(matrix, (instance.capacity, args.total_value))
    for j, term in breakdown:
        print(f"term[{j}]={term}")
    print(f"count={sum(term for _, term in breakdown)}")
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    result = run_selftest(
        args.trials, args.seed, args.max_items, args.max_component, args.max_capacity
    )
    if result.passed:
        print(f"selftest=pass trials={result.trials}")
        return 0
    print(f"selftest=fail trial={result.failed_trial}")
    for line in result.detail:
        print(line)
    return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knapcount",
        description="Exact unbounded knapsack solving by counting packings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="maximum total value reachable within capacity")
    p.add_argument("file", help="instance file")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("count", help="number of packings with an exact total value")
    p.add_argument("file", help="instance file")
    p.add_argument("--total-value", type=_nonneg_int, required=True)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("breakdown", help="per-row signed contributions to a count")
    p.add_argument("file", help="instance file")
    p.add_argument("--total-value", type=_nonneg_int, required=True)
    p.set_defaults(func=_cmd_breakdown)

    p = sub.add_parser("selftest", help="randomized cross-check against brute force")
    p.add_argument("--trials", type=_positive_int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-items", type=_positive_int, default=4)
    p.add_argument("--max-component", type=_positive_int, default=9)
    p.add_argument("--max-capacity", type=_nonneg_int, default=30)
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InstanceParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main())
