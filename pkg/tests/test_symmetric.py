import random

import pytest

from aopsynth.circuit import Circuit, GateKind
from aopsynth.symmetric import (EMPTY_SET, LeftistCircuit, TriangularSet,
                                boundary_by_scan, extract_triangular_subset,
                                flodd, huffman_tree, is_triangular,
                                optimal_delay, rho, sym_prep)
from conftest import all_assignments


def _leftist(n, kind=GateKind.OR):
    c = Circuit()
    xs = [c.add_input(f"x{i}") for i in range(n)]
    return c, LeftistCircuit(c, kind, xs)


# ----------------------------------------------------------------------
# Huffman trees


def test_huffman_examples():
    c = Circuit()
    items = [(c.add_input(f"x{i}"), 0) for i in range(5)]
    root, gates = huffman_tree(c, GateKind.AND, items)
    assert gates == 4 and c.node_depth(root) == 3

    c = Circuit()
    a = c.add_input("a")
    b = c.add_input("b")
    root, gates = huffman_tree(c, GateKind.OR, [(a, 0), (b, 2)])
    assert gates == 1
    # delay = max(0, 2) + 1 = 3 = ceil(log2(2^0 + 2^2))
    assert optimal_delay([0, 2]) == 3

    c = Circuit()
    x = c.add_input("x")
    root, gates = huffman_tree(c, GateKind.AND, [(x, 5)])
    assert root == x and gates == 0

    with pytest.raises(ValueError):
        huffman_tree(c, GateKind.AND, [])


def test_huffman_delay_is_optimal():
    rng = random.Random(0)
    for _ in range(1000):
        size = rng.randint(1, 64)
        arrivals = [rng.randint(0, 8) for _ in range(size)]
        c = Circuit()
        items = []
        delays = {}
        for i, a in enumerate(arrivals):
            node = c.add_input(f"x{i}")
            items.append((node, a))
            delays[node] = a
        root, gates = huffman_tree(c, GateKind.AND, items)
        assert gates == size - 1
        # delay of the built tree = max over leaves of arrival + path length
        for g in range(c.num_inputs, c.num_nodes):
            left, right = c.children(g)
            delays[g] = max(delays[left], delays[right]) + 1
        assert delays[root] == optimal_delay(arrivals)


# ----------------------------------------------------------------------
# leftist circuits


def test_leftist_14_shape():
    c, lt = _leftist(14)
    assert [t.depth for t in lt.tree_roots] == [3, 2, 1]
    assert lt.gate_count == 11 == c.size()


def test_leftist_power_of_two_and_singleton():
    _, lt = _leftist(8)
    assert [t.depth for t in lt.tree_roots] == [3]
    _, lt = _leftist(1)
    assert [t.depth for t in lt.tree_roots] == [0] and lt.gate_count == 0


def test_leftist_gate_count_sweep():
    for n in list(range(1, 300)) + [511, 512, 1000, 2048, 4095, 4096]:
        _, lt = _leftist(n)
        assert lt.gate_count == n - bin(n).count("1")


def test_boundary_example_leftist_14():
    _, lt = _leftist(14)
    b = lt.boundary_interval(5, 12)
    assert len(b) == 4
    assert [v.depth for v in b] == [0, 1, 2, 0]


def test_boundary_of_full_tree_and_singleton():
    _, lt = _leftist(14)
    b = lt.boundary_interval(0, 7)
    assert len(b) == 1 and b[0].node == lt.tree_roots[0].node
    b = lt.boundary_interval(13, 13)
    assert len(b) == 1 and b[0].depth == 0


def test_boundary_matches_scan_oracle_and_count_bound():
    rng = random.Random(1)
    import math
    for _ in range(300):
        n = rng.randint(1, 512)
        _, lt = _leftist(n)
        a = rng.randrange(n)
        b = rng.randrange(a, n)
        fast = lt.boundary_interval(a, b)
        slow = boundary_by_scan(lt, range(a, b + 1))
        assert [(v.node, v.depth) for v in fast] == \
            [(v.node, v.depth) for v in slow]
        # disjoint cones covering exactly K
        covered = [p for v in fast for p in range(v.lo, v.hi + 1)]
        assert covered == list(range(a, b + 1))
        k = b - a + 1
        if k >= 3:
            assert len(fast) <= 2 * math.log2(k) - 1 + 1e-9


def test_is_triangular_examples():
    _, lt = _leftist(14)
    assert is_triangular(lt, range(5, 13))          # any consecutive interval
    assert is_triangular(lt, [])                    # empty set
    complement = [0, 1, 2, 3, 4, 13]                # boundary depths (2,0,0)
    assert not is_triangular(lt, complement)


def test_sym_prep_leftist14_example():
    c, lt = _leftist(14)
    before = c.size()
    root, gates = sym_prep(lt, TriangularSet(((5, 13),)))
    assert gates == 3 and c.size() - before == 3
    assert c.node_depth(root) == 3


def test_sym_prep_reuses_full_tree():
    c, lt = _leftist(14)
    root, gates = sym_prep(lt, TriangularSet(((0, 8),)))
    assert gates == 0 and root == lt.tree_roots[0].node


def test_sym_prep_extra_only():
    c = Circuit()
    xs = [c.add_input("k")]
    lt = LeftistCircuit(c, GateKind.AND, xs)
    extra = [(c.add_input(f"l{i}"), 0) for i in range(3)]
    root, gates = huffman_tree(c, GateKind.AND, extra)
    assert gates == 2 and c.node_depth(root) == 2


def test_sym_prep_functional_and_gate_budget():
    import math

    import numpy as np
    from aopsynth import simulate

    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(3, 18)
        c = Circuit()
        xs = [c.add_input(f"x{i}") for i in range(n)]
        lt = LeftistCircuit(c, GateKind.AND, xs)
        a = rng.randrange(n)
        b = rng.randrange(a, n)
        k = b - a + 1
        n_extra = rng.randint(0, 2)
        extra_nodes = [c.add_input(f"e{i}") for i in range(n_extra)]
        root, gates = sym_prep(lt, TriangularSet(((a, b + 1),)),
                               [(e, 0) for e in extra_nodes])
        if k >= 3:
            assert gates <= 2 * math.log2(k) + n_extra - 2 + 1e-9
        else:
            assert gates <= k + n_extra - 1
        # exhaustive equivalence against the plain conjunction of K and L
        rows = list(range(a, b + 1)) + list(range(n, n + n_extra))
        for base, block in simulate.exhaustive_blocks(n + n_extra):
            got = simulate.eval_block(c, block, [root])[0]
            want = np.bitwise_and.reduce(block[rows], axis=0)
            assert np.array_equal(got, want)


# ----------------------------------------------------------------------
# triangular extraction


def test_extract_examples():
    _, lt = _leftist(14)
    full = TriangularSet(((0, 14),))
    carved, rest = extract_triangular_subset(lt, full)
    assert carved.runs == ((0, 8),) and len(rest) == 6

    # |N| = 4 split over two depth-1 trees: no depth-2 tree exists, so the
    # two equal-depth trees merge into K with |K| = 4 = 2^(d-1)
    _, lt6 = _leftist(6)
    two_trees = TriangularSet(((2, 6),))
    carved, rest = extract_triangular_subset(lt6, two_trees)
    assert len(carved) == 4

    _, lt1 = _leftist(3)
    single = TriangularSet(((1, 2),))
    carved, rest = extract_triangular_subset(lt1, single)
    assert len(carved) == 1 and len(rest) == 0


def test_extract_invariants_random():
    rng = random.Random(3)
    checked_rho = 0
    for _ in range(1000):
        n_total = rng.randint(2, 400)
        _, lt = _leftist(n_total)
        a = rng.randrange(n_total - 1)
        b = rng.randrange(a, n_total - 1)   # keep one input to the right
        subset = TriangularSet(((a, b + 1),))
        n = len(subset)
        carved, rest = extract_triangular_subset(lt, subset)
        d = n.bit_length()
        assert len(carved) == 1 << (d - 1)
        assert is_triangular(lt, carved.positions())
        assert is_triangular(lt, rest.positions())
        assert is_triangular(lt, rest.positions() + [b + 1])
        boundary = lt.boundary(carved)
        if n >= 16:
            assert len(boundary) + rho(n - len(carved)) <= rho(n)
            checked_rho += 1
        if n - len(carved) >= 2:
            assert len(boundary) + _floor2log2(n - len(carved) - 1) \
                <= _floor2log2(n - 1)
    assert checked_rho > 50


def _floor2log2(x):
    return (x * x).bit_length() - 1


# ----------------------------------------------------------------------
# arithmetic helpers


def test_rho_values():
    assert rho(0) == 0 and rho(1) == 1 and rho(2) == 2
    assert rho(3) == 2
    assert rho(17) == 8
    assert all(rho(n) <= rho(n + 1) for n in range(2000))


def test_flodd_values():
    assert flodd(5.998) == 5
    assert flodd(7) == 7
    assert flodd(6.0) == 5
    with pytest.raises(ValueError):
        flodd(0.5)


def test_floor_2log2_spot_checks():
    # floor(2 log2 n) - 1 <= floor(2 log2 (n-1)) for n in 3..1e5
    for n in range(3, 100001):
        assert _floor2log2(n) - 1 <= _floor2log2(n - 1)


def test_extract_rejects_empty():
    _, lt = _leftist(5)
    with pytest.raises(ValueError):
        extract_triangular_subset(lt, TriangularSet(()))


def test_huffman_rejects_large_arrivals():
    c = Circuit()
    x = c.add_input("x")
    with pytest.raises(ValueError):
        huffman_tree(c, GateKind.AND, [(x, 64)])
