"""Shared test data, hypothesis strategies and a series-based reference count."""

from math import gcd

from hypothesis import strategies as st

from knapcount import GeneratorMatrix, UkpInstance, validate_instance

DEMO_ITEMS = [(4, 1), (7, 3), (5, 3)]
DEMO_CAPACITY = 10
DEMO_COLUMNS = ((1, 0), (4, 1), (7, 3), (5, 3))


def demo_matrix() -> GeneratorMatrix:
    return GeneratorMatrix(DEMO_COLUMNS)


def demo_instance(capacity: int = DEMO_CAPACITY) -> UkpInstance:
    return validate_instance(DEMO_ITEMS, capacity)


# distinct coprime pairs always have distinct ratios, so any subset is valid
COPRIME_PAIRS = tuple(
    (w, v) for w in range(1, 10) for v in range(1, 10) if gcd(w, v) == 1
)


def instances(max_items: int = 4, max_capacity: int = 30):
    return st.builds(
        validate_instance,
        st.lists(st.sampled_from(COPRIME_PAIRS), min_size=1, max_size=max_items, unique=True),
        st.integers(0, max_capacity),
    )


def positive_generator_lists(max_size: int = 4, max_entry: int = 12):
    return st.lists(st.integers(1, max_entry), min_size=1, max_size=max_size)


@st.composite
def mixed_sign_generator_lists(draw, max_size: int = 4, max_entry: int = 12):
    magnitudes = draw(st.lists(st.integers(1, max_entry), min_size=1, max_size=max_size))
    keep = [draw(st.booleans()) for _ in magnitudes]
    entries = [m if k else -m for m, k in zip(magnitudes, keep)]
    if all(e > 0 for e in entries):
        entries[draw(st.integers(0, len(entries) - 1))] *= -1
    return entries


def multiply_truncated(series: list[int], stride: int, degree: int) -> list[int]:
    """series * (1 + t**stride + t**(2*stride) + ...) truncated at ``degree``."""
    out = [0] * (degree + 1)
    for exponent, coeff in enumerate(series):
        if coeff:
            for e in range(exponent, degree + 1, stride):
                out[e] += coeff
    return out


def build_signed_series(d, degree: int) -> tuple[list[int], int, int]:
    """Truncated product series with the overall sign and exponent shift for d.

    Each factor is the geometric series in t**|entry|; a negative entry
    additionally flips the sign and shifts the exponent by its magnitude.
    """
    series = [0] * (degree + 1)
    series[0] = 1
    sign, shift = 1, 0
    for g in d:
        series = multiply_truncated(series, abs(g), degree)
        if g < 0:
            sign = -sign
            shift += abs(g)
    return series, sign, shift


def series_signed_count(l: int, d, degree: int | None = None) -> int:
    """Coefficient-of-t**l reference for signed generator lists."""
    if degree is None:
        degree = abs(l) + sum(abs(g) for g in d)
    series, sign, shift = build_signed_series(d, degree)
    exponent = l - shift
    if exponent < 0 or exponent > degree:
        return 0
    return sign * series[exponent]
