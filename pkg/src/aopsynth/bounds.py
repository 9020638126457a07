"""Bound machinery: capacity function, depth table, gate-count budgets.

All real-valued comparisons use doubles with a +1e-9 guard before floors,
ceilings and the ``m <= mu`` test; the magnitudes involved stay far below
the 53-bit mantissa for every feasible argument.
"""

from __future__ import annotations

import math

from .symmetric import flodd, rho

XI = 1.999
ALPHA = 2.67
EPS = 1e-9


def mu(d: int, n: int) -> float:
    """Capacity lower-bound function xi * (2^d - n - 2) / d + 2."""
    if d < 1:
        raise ValueError("mu needs d >= 1")
    return XI * (2.0 ** d - n - 2.0) / d + 2.0


def d_min(n: int, m: int) -> int:
    """Least d >= 1 with m <= mu(d, n)."""
    if m < 1:
        raise ValueError("d_min needs m >= 1")
    d = 1
    while not m <= mu(d, n) + EPS:
        d += 1
    return d


def psi(d: int) -> float:
    """Per-level additional-gate rate charged to alternating splits."""
    if d < 5:
        raise ValueError("psi is defined for d >= 5")
    a = XI * (2.0 ** (d - 1) - 2.0) / (d - 1)
    return (1 + rho((flodd(a) + 1) // 2)) / (math.ceil(a - EPS) + 2)


def phi(d: int) -> float:
    """-1.67 for d <= 4, else phi(d-1) + psi(d); negative, increasing."""
    if d < 1:
        raise ValueError("phi is defined for d >= 1")
    v = -1.67
    for dd in range(5, d + 1):
        v += psi(dd)
    return v


def capital_phi(d: int, m: int, n: int) -> float:
    """Additional-gate budget (alpha + phi(d)) * m + rho(n)."""
    return (ALPHA + phi(d)) * m + rho(n)


# ----------------------------------------------------------------------
# embedded reference tables

# d_min(n, m) for m = 1..9 (rows) and n = 0..12 (columns).
DMIN_GRID: tuple[tuple[int, ...], ...] = (
    (1, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 4),
    (1, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4),
    (2, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 5),
    (3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 5, 5, 5),
    (3, 3, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5),
    (4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5),
    (4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5, 5, 5),
    (4, 4, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5),
    (5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5),
)

# Upper bounds on psi(d) for d = 5..18 and on the cumulative sum.
PSI_BOUNDS: tuple[float, ...] = (
    0.3334, 0.3572, 0.3044, 0.2369, 0.1516, 0.1035, 0.0677,
    0.0428, 0.0249, 0.0151, 0.0090, 0.0053, 0.0030, 0.0017,
)
PSI_CUMSUM_BOUND = 1.6565


def addgate_cells() -> list[tuple[int, int]]:
    """All (m, n) cells of the small-case additional-gate table.

    Rows m <= 2 hold for every n (listed up to n = 12 here); rows m >= 3
    cover exactly the pairs with d_min(n, m) <= 4.
    """
    cells = [(m, n) for m in (1, 2) for n in range(13)]
    tops = {3: 11, 4: 9, 5: 7, 6: 5, 7: 3, 8: 1}
    for m, top in tops.items():
        cells.extend((m, n) for n in range(top + 1))
    return cells


def addgate_bound(m: int, n: int) -> float:
    """Additional-gate budget for one small-case cell."""
    if n <= 1:
        return m + n - 1 if m <= 5 else m + n
    if m <= 2:
        return m + 2 * math.log2(n + 1) - 3
    if m == 3:
        if n <= 4:
            return m + 2 * math.log2(n + 1) - 3
        if n <= 8:
            return m + 2 * math.log2(n) - 2
        if n <= 10:
            return m + 5
        return m + 6
    if m == 4:
        return m + 2 * math.log2(n) - 2 if n <= 8 else m + 5
    if m == 5:
        return m + 2 * math.log2(n) - 2
    return m + 2 * math.log2(n + 1) - 2


# ----------------------------------------------------------------------
# depth/size budgets of the named constructions (used by reports and tests)


def _floor(x: float) -> int:
    return math.floor(x + EPS)


def _ceil(x: float) -> int:
    return math.ceil(x - EPS)


def aop_depth_bound(m: int) -> int:
    """floor(log2 m + log2 log2 m + 0.65) for m >= 3; exact small cases below."""
    if m < 2:
        raise ValueError("AND-OR path needs m >= 2")
    if m == 2:
        return 1
    return _floor(math.log2(m) + math.log2(math.log2(m)) + 0.65)


def extended_aop_depth_bound(n: int, m: int) -> int:
    return d_min(n, m) if m >= 1 else max(1, (max(n, 1) - 1).bit_length())


def aop_size_bound(m: int) -> int:
    return _ceil(3.67 * m - 2)


def extended_aop_size_bound(n: int, m: int) -> float:
    return 3.67 * m + n + rho(n) - 2


def lf_prefix_depth_bound(n: int, f: int) -> int:
    return (max(1, (n - 1).bit_length())) + f if n > 1 else 0


def lf_prefix_size_bound(n: int, f: int) -> int:
    return _ceil(2 * (1 + 2.0 ** -f) * n)


def lf_adder_depth_bound(n: int, f: int) -> int:
    return 2 * (((n - 1).bit_length()) + f) if n > 1 else 0


def lf_adder_size_bound(n: int, f: int) -> int:
    return _ceil(6 * (1 + 2.0 ** -f) * n)


def ripple_depth(n: int) -> int:
    return max(0, 2 * n - 2)


def halved_depth_bound(n: int) -> int:
    return n + 2


def halved_size_bound(n: int) -> float:
    return 3.5 * n


def a1_depth_bound(n: int) -> int:
    if n < 3:
        raise ValueError("a1 needs n >= 3")
    return _floor(math.log2(n) + math.log2(math.log2(n)) + 2.65)


def a1_size_bound(n: int) -> float:
    return 6.2 * n * math.log2(n)


def _lll(n: int) -> float:
    return math.log2(math.log2(math.log2(n)))


def a2_depth_bound(n: int) -> int:
    if n < 4:
        raise ValueError("a2 needs n >= 4")
    return _floor(math.log2(n) + math.log2(math.log2(n)) + _lll(n) + 6.6)


def a2_size_bound(n: int) -> float:
    return 21.6 * n


def a3_depth_bound(n: int) -> int:
    if n < 4:
        raise ValueError("a3 needs n >= 4")
    return _floor(math.log2(n) + math.log2(math.log2(n)) + _lll(n) + 7.6)


def a3_size_bound(n: int) -> float:
    return 16.7 * n


def percarry_depth_bound(n: int) -> int:
    if n == 1:
        return 0
    return max(aop_depth_bound(2 * i - 1) if 2 * i - 1 >= 2 else 0
               for i in range(1, n + 1))


def percarry_size_bound(n: int) -> float:
    return sum(max(0.0, 3.67 * (2 * i - 1) - 2) for i in range(2, n + 1))
