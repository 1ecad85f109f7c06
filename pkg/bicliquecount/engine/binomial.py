"""Exact binomial coefficients over Python's arbitrary-precision integers."""
from functools import lru_cache

# Biclique counts and binomials are plain ints: exact, never negative, unbounded width.
BigCount = int

_CACHED_N = 512


def _binomial_product(n: int, k: int) -> BigCount:
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        # exact at every step: result is C(n - k + i - 1, i - 1) * (n - k + i) before the division
        result = result * (n - k + i) // i
    return result


@lru_cache(maxsize=None)
def _cached_binomial(n: int, k: int) -> BigCount:
    return _binomial_product(n, k)


def binomial(n: int, k: int) -> BigCount:
    """C(n, k), and 0 when k < 0 or k > n."""
    if k < 0 or n < 0 or k > n:
        return 0
    if n < _CACHED_N:
        return _cached_binomial(n, k)
    return _binomial_product(n, k)
