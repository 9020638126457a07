import itertools

import numpy as np
import pytest

from aopsynth import simulate, verify
from aopsynth.bounds import (halved_depth_bound, halved_size_bound,
                             lf_adder_depth_bound, lf_adder_size_bound,
                             lf_prefix_depth_bound, lf_prefix_size_bound)
from aopsynth.circuit import Circuit, GateKind
from aopsynth.prefix import (and_prefix_circuit, halved_adder,
                             lf_combined_adder, prefix_plan, ripple_adder)


def _fresh_inputs(n, prefix="z"):
    c = Circuit()
    return c, [c.add_input(f"{prefix}{i}") for i in range(n)]


def _valid_f(n):
    cap = (n - 1).bit_length() if n > 1 else 0
    return sorted(set([0, 1, 2, 3, cap])) if cap >= 3 else list(range(cap + 1))


def test_pgate_associativity_gate_level():
    def build_pgate(c, hi, lo):
        t = c.add_gate(GateKind.AND, hi[1], lo[0])
        y = c.add_gate(GateKind.OR, hi[0], t)
        x = c.add_gate(GateKind.AND, hi[1], lo[1])
        return (y, x)

    for bits in itertools.product((0, 1), repeat=6):
        a, b, d = (bits[0], bits[1]), (bits[2], bits[3]), (bits[4], bits[5])
        c1 = Circuit()
        nodes = [c1.add_input(f"i{j}") for j in range(6)]
        pa = (nodes[0], nodes[1])
        pb = (nodes[2], nodes[3])
        pc = (nodes[4], nodes[5])
        left = build_pgate(c1, build_pgate(c1, pa, pb), pc)
        right = build_pgate(c1, pa, build_pgate(c1, pb, pc))
        c1.set_output("ly", left[0])
        c1.set_output("lx", left[1])
        c1.set_output("ry", right[0])
        c1.set_output("rx", right[1])
        ly, lx, ry, rx = c1.evaluate(bits)
        assert (ly, lx) == (ry, rx), bits


def test_plan_shapes_and_bounds():
    plan = prefix_plan(1, 0)
    assert plan.steps == () and plan.out_slots == (0,)

    plan = prefix_plan(4, 0)
    assert plan.depth() <= 2 and len(plan.steps) <= 16
    # semantic check by instantiating with index sets
    outs = plan.instantiate([frozenset([i]) for i in range(4)],
                            lambda a, b: a | b)
    assert outs == [frozenset(range(i + 1)) for i in range(4)]

    plan = prefix_plan(1024, 2)
    assert plan.depth() <= 12 and len(plan.steps) <= 2560

    with pytest.raises(ValueError):
        prefix_plan(8, 5)


def test_plan_spans_sweep():
    for n in list(range(1, 70)) + [100, 256, 1000]:
        for f in _valid_f(n):
            plan = prefix_plan(n, f)
            assert plan.depth() <= lf_prefix_depth_bound(n, f), (n, f)
            assert len(plan.steps) <= lf_prefix_size_bound(n, f), (n, f)
            outs = plan.instantiate([frozenset([i]) for i in range(n)],
                                    lambda a, b: a | b)
            assert all(outs[i] == frozenset(range(i + 1)) for i in range(n))


def test_and_prefix_exhaustive_small():
    for n in (2, 5, 8, 13):
        for f in _valid_f(n):
            c, zs = _fresh_inputs(n)
            outs = and_prefix_circuit(c, zs, f)
            for i, node in enumerate(outs):
                c.set_output(f"Z{i}", node)
            assert c.depth() <= lf_prefix_depth_bound(n, f)
            assert c.size() <= lf_prefix_size_bound(n, f)

            def oracle(block):
                return np.bitwise_and.accumulate(block, axis=0)

            assert verify.verify_equivalence(c, oracle, "exhaustive").ok


def test_and_prefix_single_gate():
    c, zs = _fresh_inputs(2)
    outs = and_prefix_circuit(c, zs, 0)
    assert c.size() == 1 and c.node_depth(outs[1]) == 1 and outs[0] == zs[0]


def test_and_prefix_random_large():
    for n in (257, 1024, 4096):
        for f in (0, 1, 2, 3, (n - 1).bit_length()):
            c, zs = _fresh_inputs(n)
            outs = and_prefix_circuit(c, zs, f)
            for i in (0, 1, n // 2, n - 1):
                c.set_output(f"Z{i}", outs[i])
            assert c.depth() <= lf_prefix_depth_bound(n, f)
            assert c.size() <= lf_prefix_size_bound(n, f)
            rows = [0, 1, n // 2, n - 1]

            def oracle(block, rows=rows):
                acc = np.bitwise_and.accumulate(block, axis=0)
                return acc[rows]

            assert verify.verify_equivalence(c, oracle, "random",
                                             trials=2000).ok


def test_combined_adder_two_pairs():
    c = Circuit()
    p = [c.add_input(f"p{i}") for i in range(2)]
    g = [c.add_input(f"g{i}") for i in range(2)]
    carries, prefixes = lf_combined_adder(c, p, g, 0)
    assert c.size() == 3
    assert carries[0] == g[0]
    for name, node in (("c1", carries[0]), ("c2", carries[1])):
        c.set_output(name, node)
    from aopsynth.oracles import carry_reference
    for bits in itertools.product((0, 1), repeat=4):
        pv, gv = bits[:2], bits[2:]
        assert c.evaluate(list(pv) + list(gv))[0:2] == carry_reference(pv, gv)


def test_combined_adder_bounds_and_function():
    for n in list(range(1, 40)) + [64, 100, 256, 1000]:
        for f in _valid_f(n):
            c = Circuit()
            p, g = [], []
            for i in range(n):
                p.append(c.add_input(f"p{i}"))
                g.append(c.add_input(f"g{i}"))
            carries, prefixes = lf_combined_adder(c, p, g, f)
            for i, node in enumerate(carries, start=1):
                c.set_output(f"c{i}", node)
            assert c.depth() <= lf_adder_depth_bound(n, f), (n, f)
            assert c.size() <= lf_adder_size_bound(n, f), (n, f)
            # prefix side: depth bound and equality with a pure AND prefix
            pd = max(c.node_depth(x) for x in prefixes)
            assert pd <= lf_prefix_depth_bound(n, f), (n, f)
            mode = "exhaustive" if n <= 6 else "random"
            assert verify.verify_equivalence(
                c, verify.carry_oracle(n), mode, trials=800).ok, (n, f)
            block = simulate.random_block(2 * n, 500, seed=9)
            got = simulate.eval_block(c, block, prefixes)
            want = np.bitwise_and.accumulate(block[0::2], axis=0)
            assert np.array_equal(got, want)


def test_ripple_metrics():
    for n, depth in ((1, 0), (2, 2), (3, 4)):
        c = Circuit()
        p = [c.add_input(f"p{i}") for i in range(n)]
        g = [c.add_input(f"g{i}") for i in range(n)]
        outs = ripple_adder(c, p, g)
        assert c.size() == max(0, 2 * n - 2)
        assert max(c.node_depth(o) for o in outs) == depth


def test_halved_bounds_sweep():
    for n in range(0, 257):
        c = Circuit()
        p = [c.add_input(f"p{i}") for i in range(n)]
        g = [c.add_input(f"g{i}") for i in range(n)]
        outs = halved_adder(c, p, g)
        if n == 0:
            assert outs == []
            continue
        assert max(c.node_depth(o) for o in outs) <= halved_depth_bound(n)
        assert c.size() <= halved_size_bound(n)


def test_halved_functional():
    for n in (1, 2, 3, 4, 7, 10):
        c = Circuit()
        p, g = [], []
        for i in range(n):
            p.append(c.add_input(f"p{i}"))
            g.append(c.add_input(f"g{i}"))
        for i, node in enumerate(halved_adder(c, p, g), start=1):
            c.set_output(f"c{i}", node)
        assert verify.verify_equivalence(
            c, verify.carry_oracle(n), "exhaustive").ok, n
        assert c.depth() <= n + 2
