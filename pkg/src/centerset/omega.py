"""Closed form for the achievable center sizes, and central-ratio witnesses."""

from __future__ import annotations

from .constructions import witness
from .errors import BadParameters
from .graph import Graph, cycle


def _check_query(n: int, r: int) -> None:
    if n < 3:
        raise BadParameters(f"order must be at least 3, got {n}")
    if not 1 <= r <= n // 2:
        raise BadParameters(f"radius must satisfy 1 <= r <= n/2, got r={r} for n={n}")


def has_gap(n: int, r: int) -> bool:
    """True when some center sizes between the two runs are impossible."""
    _check_query(n, r)
    return 8 * r > 3 * n + 2 and 2 * r < n


def omega_set(n: int, r: int) -> list[int]:
    """Every ``s`` such that some graph of order ``n`` and radius ``r`` has ``|C(G)| = s``."""
    _check_query(n, r)
    if 2 * r == n:
        return [2, n]
    if 8 * r <= 3 * n + 2:
        return [s for s in range(1, n + 1) if s != n - 1]
    low = range(1, n - 2 * r + 3)
    high = range(6 * r - 2 * n + 1, n - 1)
    return [*low, *high, n]


def omega_contains(n: int, r: int, s: int) -> bool:
    _check_query(n, r)
    if 2 * r == n:
        return s in (2, n)
    if not 1 <= s <= n or s == n - 1:
        return False
    if 8 * r <= 3 * n + 2:
        return True
    return s <= n - 2 * r + 2 or s >= 6 * r - 2 * n + 1


def gap(n: int, r: int) -> list[int]:
    """The missing run ``n-2r+3 .. 6r-2n`` (empty when there is no gap)."""
    if not has_gap(n, r):
        return []
    return list(range(n - 2 * r + 3, 6 * r - 2 * n + 1))


def ratio_witness(a: int, b: int) -> Graph:
    """A connected graph whose central ratio equals ``a / b``."""
    if not 1 <= a <= b:
        raise BadParameters(f"need 1 <= a <= b, got a={a}, b={b}")
    if a == b:
        return cycle(max(b, 3))
    # radius 1 is always admissible here since b >= 2
    if a != b - 1:
        return witness(b, 1, a)[0]
    return witness(2 * b, 1, 2 * a)[0]
