import math

import pytest

from aopsynth import bounds


def test_mu_values():
    assert bounds.mu(3, 0) == pytest.approx(5.998)
    assert bounds.mu(1, 0) == pytest.approx(2.0)
    assert bounds.mu(4, 0) == pytest.approx(8.9965)


def test_d_min_examples():
    assert bounds.d_min(0, 3) == 2
    assert bounds.d_min(8, 1) == 4
    assert bounds.d_min(12, 3) == 5


def test_d_min_grid_matches_embedded_table():
    for m in range(1, 10):
        for n in range(13):
            assert bounds.d_min(n, m) == bounds.DMIN_GRID[m - 1][n], (m, n)


def test_psi_table():
    total = 0.0
    for i, d in enumerate(range(5, 19)):
        v = bounds.psi(d)
        total += v
        assert v <= bounds.PSI_BOUNDS[i] + 5e-5, d
    assert total <= bounds.PSI_CUMSUM_BOUND + 5e-5
    assert bounds.psi(5) == pytest.approx(3 / 9)
    with pytest.raises(ValueError):
        bounds.psi(4)


def test_phi_negative_and_monotone():
    values = [bounds.phi(d) for d in range(1, 65)]
    assert all(v < 0 for v in values)
    assert all(a <= b + 1e-15 for a, b in zip(values, values[1:]))


def test_capital_phi_base():
    for m in range(1, 30):
        for n in (0, 1, 5, 17):
            assert bounds.capital_phi(4, m, n) == pytest.approx(
                1.0 * m + bounds.rho(n))


def _depth_chain_bound(n, m):
    return math.floor(math.log2(m + n) + math.log2(math.log2(m)) + 0.65 + 1e-9)


def test_dmin_bounded_by_depth_formula():
    """d_min(n, m) <= floor(log2(m+n) + log2 log2 m + 0.65) for m in 3..2^16,
    n in 0..m.

    d_min is a step function of n while the right-hand side increases with
    n, so checking n = 0 and every n where d_min jumps covers all pairs.
    """
    from aopsynth.bounds import EPS, XI, d_min, mu

    m = 3
    while m <= 1 << 16:
        checks = {0, m}
        d0 = d_min(0, m)
        # d_min(n, m) = d as long as m <= mu(d, n); the jump to d+1 happens
        # just above n*(d) = 2^d - 2 - d (m - 2) / xi
        d = d0
        while True:
            n_star = math.floor(2.0 ** d - 2 - d * (m - 2) / XI + EPS)
            if n_star >= m:
                break
            checks.add(max(0, n_star))
            checks.add(min(m, n_star + 1))
            d += 1
        for n in checks:
            if 0 <= n <= m:
                assert d_min(n, m) <= _depth_chain_bound(n, m), (m, n)
        m += 1 if m < 4096 else max(1, m // 64)
    # spot-exhaustive for small m to guard the threshold enumeration
    for m in range(3, 130):
        for n in range(m + 1):
            assert d_min(n, m) <= _depth_chain_bound(n, m), (m, n)


def test_addgate_cells_domain():
    cells = bounds.addgate_cells()
    for m, n in cells:
        if m >= 3:
            assert bounds.d_min(n, m) <= 4
    # cells one past each row's end need depth 5
    for m, top in ((3, 11), (4, 9), (5, 7), (6, 5), (7, 3), (8, 1)):
        assert bounds.d_min(top + 1, m) == 5


def test_bound_formula_values():
    assert bounds.aop_depth_bound(2) == 1
    assert bounds.aop_depth_bound(5) == 4
    assert bounds.a1_depth_bound(3) == 4          # floor(4.899)
    assert bounds.a1_depth_bound(1024) == 15
    assert bounds.a2_depth_bound(65536) == 28
    assert bounds.a2_depth_bound(1024) == 21
    assert bounds.a3_depth_bound(2048) == 23
    assert bounds.lf_prefix_depth_bound(1024, 2) == 12
    assert bounds.lf_prefix_size_bound(1024, 2) == 2560
