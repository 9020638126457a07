import random

import pytest

from aopsynth import verify
from aopsynth.aop import (build_aop, build_extended_aop, gate_report,
                          synth_carry_aop)
from aopsynth.bounds import (EPS, addgate_bound, addgate_cells, capital_phi,
                             d_min, extended_aop_size_bound)
from aopsynth.circuit import Circuit


def test_small_examples():
    circuit, _ = build_aop(2)
    assert circuit.depth() == 1 and circuit.size() == 1

    circuit, _ = build_aop(5)
    assert circuit.depth() == 3

    circuit, _ = build_aop(9)
    assert circuit.depth() <= d_min(0, 9) == 5

    circuit, ctx = build_extended_aop(4, 3)
    assert circuit.depth() == 3    # ceil(log2 7) via the m = 3 base case

    with pytest.raises(ValueError):
        build_aop(1)


def test_grid_depth_size_and_function():
    for m in range(1, 10):
        for n in range(13):
            circuit, ctx = build_extended_aop(n, m)
            report = gate_report(ctx)
            dm = d_min(n, m)
            assert circuit.depth() <= dm, (m, n)
            if m <= 2:
                assert circuit.depth() == (m + n - 1).bit_length(), (m, n)
            assert circuit.size() <= extended_aop_size_bound(n, m) + EPS
            assert report["additional"] <= capital_phi(dm, m, n) + EPS
            assert report["total"] == circuit.size()
            assert report["alt_split"] <= max(0, m - 1)
            if m >= 2:
                assert report["leftist"] <= m + n - 2
            verdict = verify.verify_equivalence(
                circuit, verify.extended_aop_oracle(n), "exhaustive")
            assert verdict.ok, (m, n, verdict.counterexample)


def test_table2_cells():
    for m, n in addgate_cells():
        _, ctx = build_extended_aop(n, m)
        assert gate_report(ctx)["additional"] <= addgate_bound(m, n) + EPS, (m, n)


def test_random_pairs_bounds():
    rng = random.Random(5)
    for _ in range(150):
        m = rng.randint(1, 200)
        n = rng.randint(0, 200)
        circuit, ctx = build_extended_aop(n, m)
        report = gate_report(ctx)
        dm = d_min(n, m)
        assert circuit.depth() <= dm
        assert circuit.size() <= extended_aop_size_bound(n, m) + EPS
        assert report["additional"] <= capital_phi(dm, m, n) + EPS
        verdict = verify.verify_equivalence(
            circuit, verify.extended_aop_oracle(n), "random", trials=300)
        assert verdict.ok, (m, n)


def test_dual_polarity():
    for m in range(2, 24):
        circuit, _ = build_aop(m, dual=True)
        verdict = verify.verify_equivalence(
            circuit, verify.aop_oracle(dual=True), "exhaustive")
        assert verdict.ok, m
    circuit, _ = build_extended_aop(3, 6, dual=True)
    verdict = verify.verify_equivalence(
        circuit, verify.extended_aop_oracle(3, dual=True), "exhaustive")
    assert verdict.ok


def test_formula_mode():
    for m in list(range(2, 40)) + [100, 257]:
        shared, _ = build_aop(m)
        formula, ctx = build_aop(m, mode="formula")
        assert formula.depth() == shared.depth(), m
        assert formula.size() <= m * formula.depth() - 1, m
        assert formula.fanout() <= formula.depth(), m
        assert gate_report(ctx)["leftist"] == 0
    for n, m in ((3, 7), (9, 4), (40, 60)):
        formula, _ = build_extended_aop(n, m, mode="formula")
        assert formula.size() <= m * formula.depth() + n - 1
        assert formula.fanout() <= formula.depth()
        verdict = verify.verify_equivalence(
            formula, verify.extended_aop_oracle(n), "random", trials=500)
        assert verdict.ok


def test_carry_aop_helper():
    from aopsynth.oracles import carry_reference
    from conftest import all_assignments
    for n in range(1, 8):
        circuit = Circuit()
        p = [circuit.add_input(f"p{i}") for i in range(n)]
        g = [circuit.add_input(f"g{i}") for i in range(n)]
        node = synth_carry_aop(circuit, p, g)
        circuit.set_output("c", node)
        for bits in all_assignments(2 * n):
            pv, gv = bits[:n], bits[n:]
            assert circuit.evaluate(bits) == [carry_reference(pv, gv)[-1]]


def test_gate_report_examples():
    _, ctx = build_aop(2)
    report = gate_report(ctx)
    assert report["alt_split"] == 0

    circuit, ctx = build_aop(5)
    report = gate_report(ctx)
    assert report["additional"] <= capital_phi(3, 5, 0) == 5
    assert report["total"] == circuit.size()


def test_rejects_empty():
    with pytest.raises(ValueError):
        build_extended_aop(0, 0)


def test_dual_formula_combination():
    for n, m in ((0, 9), (2, 5), (6, 11)):
        circuit, ctx = build_extended_aop(n, m, dual=True, mode="formula")
        assert gate_report(ctx)["leftist"] == 0
        assert circuit.fanout() <= circuit.depth()
        verdict = verify.verify_equivalence(
            circuit, verify.extended_aop_oracle(n, dual=True), "exhaustive")
        assert verdict.ok, (n, m)


def test_synth_over_gate_nodes():
    # the synthesizer accepts arbitrary existing nodes, not just raw inputs
    from aopsynth.circuit import GateKind
    from aopsynth.aop import synth_aop_node
    from conftest import all_assignments
    from aopsynth.oracles import aop_reference

    circuit = Circuit()
    raw = [circuit.add_input(f"x{i}") for i in range(6)]
    t = [circuit.add_gate(GateKind.AND, raw[i], raw[i + 1]) for i in range(5)]
    root = synth_aop_node(circuit, t)
    circuit.set_output("g", root)
    for bits in all_assignments(6):
        t_bits = [bits[i] & bits[i + 1] for i in range(5)]
        assert circuit.evaluate(bits) == [aop_reference(t_bits)]
    # input depths offset the result by exactly their depth
    assert circuit.depth() <= 1 + d_min(0, 5)


@pytest.mark.parametrize("mode", ["shared", "formula"])
def test_property_small_instances(mode):
    from hypothesis import given, settings
    from hypothesis import strategies as st
    from conftest import all_assignments
    from aopsynth.oracles import extended_aop_reference

    @given(n=st.integers(0, 6), m=st.integers(0, 8), dual=st.booleans())
    @settings(max_examples=120, deadline=None)
    def check(n, m, dual):
        if n + m == 0:
            return
        circuit, ctx = build_extended_aop(n, m, dual=dual, mode=mode)
        if m >= 1:
            assert circuit.depth() <= d_min(n, m)
        report = gate_report(ctx)
        assert report["total"] == circuit.size()
        for bits in all_assignments(n + m):
            want = extended_aop_reference(bits[:n], bits[n:], dual)
            assert circuit.evaluate(bits) == [want]

    check()
