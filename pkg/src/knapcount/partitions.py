"""Exact counting of representations of an integer by nonnegative combinations.

`count_nonneg` answers: in how many ways can ``s`` be written as
``x[0]*d[0] + x[1]*d[1] + ...`` with every ``x[i]`` a nonnegative integer?
Duplicate generators are treated as distinct variables, so ``d = [2, 2]``
counts ``(x0, x1)`` pairs, not multisets.

`count_signed` extends the count to generator lists containing negative
entries through the geometric-series identity
``1/(1 - t**-a) == -t**a / (1 - t**a)``: each negative generator flips the
sign of the result and shifts the argument by its (negative) value.
"""

from __future__ import annotations

from collections.abc import Sequence

__all__ = ["count_nonneg", "count_signed"]


def _checked(d: Sequence[int], allow_negative: bool) -> list[int]:
    gens = list(d)
    if not gens:
        raise ValueError("generator list must not be empty")
    for g in gens:
        if not isinstance(g, int):
            raise TypeError(f"generators must be integers, got {g!r}")
        if g == 0:
            raise ValueError("generators must be nonzero")
        if g < 0 and not allow_negative:
            raise ValueError(f"generators must be positive, got {g}")
    return gens


def count_nonneg(s: int, d: Sequence[int]) -> int:
    """Number of nonnegative integer vectors x with ``s == sum(x[i] * d[i])``.

    Every generator must be strictly positive.  The count is 0 for negative
    ``s`` and 1 for ``s == 0`` (the empty combination).  Computed bottom-up
    by an unbounded-coin dynamic program, one pass per generator, in
    O(len(d) * s) time with exact integer arithmetic throughout.
    """
    gens = _checked(d, allow_negative=False)
    if s < 0:
        return 0
    table = [0] * (s + 1)
    table[0] = 1
    for g in gens:
        for t in range(g, s + 1):
            table[t] += table[t - g]
    return table[s]


def count_signed(l: int, d: Sequence[int]) -> int:
    """Signed count for a generator list that may contain negative entries.

    With K negative generators the result is ``(-1)**K`` times the
    all-positive count taken at ``l`` plus the sum of the negative entries;
    with none it reduces to :func:`count_nonneg`.  Zero generators are
    rejected (their geometric series has no usable normal form).
    """
    gens = _checked(d, allow_negative=True)
    shift = sum(g for g in gens if g < 0)
    if shift == 0:
        return count_nonneg(l, gens)
    negatives = sum(1 for g in gens if g < 0)
    sign = -1 if negatives % 2 else 1
    return sign * count_nonneg(l + shift, [abs(g) for g in gens])
