import itertools

import pytest

from aopsynth.circuit import Circuit, GateKind


def all_assignments(n):
    return itertools.product((0, 1), repeat=n)


def brute_force_equal(circuit, reference, n_inputs):
    """Exhaustively compare circuit outputs against a bit-level callable."""
    for bits in all_assignments(n_inputs):
        if circuit.evaluate(bits) != reference(bits):
            return bits
    return None


@pytest.fixture
def fig_aop5():
    """Depth-3, size-5 circuit for t0 & (t1 | (t2 & (t3 | t4))).

    Realized as (t0 & t1) | ((t0 & t2) & (t3 | t4)).
    """
    c = Circuit()
    t = [c.add_input(f"t{i}") for i in range(5)]
    a = c.add_gate(GateKind.AND, t[0], t[1])
    b = c.add_gate(GateKind.AND, t[0], t[2])
    d = c.add_gate(GateKind.OR, t[3], t[4])
    e = c.add_gate(GateKind.AND, b, d)
    out = c.add_gate(GateKind.OR, a, e)
    c.set_output("g", out)
    return c


@pytest.fixture
def standard_aop5():
    """The standard (ripple-shaped) circuit: depth 4, size 4."""
    c = Circuit()
    t = [c.add_input(f"t{i}") for i in range(5)]
    x = c.add_gate(GateKind.OR, t[3], t[4])
    x = c.add_gate(GateKind.AND, t[2], x)
    x = c.add_gate(GateKind.OR, t[1], x)
    x = c.add_gate(GateKind.AND, t[0], x)
    c.set_output("g", x)
    return c
