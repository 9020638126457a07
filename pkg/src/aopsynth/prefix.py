"""Parallel prefix networks, prefix adders and the small halved adder.

``prefix_plan`` builds the depth/size-tradeoff prefix network family
parameterized by f (0 <= f <= ceil(log2 n)):

* f >= 1 uses odd-even condensation: combine adjacent pairs, recurse at
  f - 1 on the condensed sequence, then one fix-up combine per interior
  even position.
* f = 0 splits in half, runs the f = 1 scheme on the low half (whose top
  output is ready one level early), recurses at f = 0 on the high half and
  joins every high output with the low top.

This meets depth <= ceil(log2 n) + f with at most 2 (1 + 2^-f) n combine
steps; the f = 0 size recurrence is S(n) = S(n/2) + S(n/4) + n with fixed
point 4n.  Instantiating a step with one AND gate solves the AND-prefix
problem; instantiating it over (generate, propagate) pairs with the adder
prefix operator (y1, x1) # (y0, x0) = (y1 | (x1 & y0), x1 & x0) -- three
gates, the x-AND first so the propagate chain stays one gate per level --
yields the combined prefix adder.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, TypeVar

from .circuit import Circuit, GateKind, NodeId

T = TypeVar("T")


def _check_f(n: int, f: int) -> None:
    cap = (n - 1).bit_length() if n > 1 else 0
    if not 0 <= f <= cap:
        raise ValueError(f"f must satisfy 0 <= f <= ceil(log2 n) = {cap}, got {f}")


def _prefixes(items: list[T], f: int, combine: Callable[[T, T], T]) -> list[T]:
    """All prefixes items[i] o ... o items[0] for an associative combine."""
    n = len(items)
    if n == 1:
        return [items[0]]
    if f == 0:
        m = (n + 1) // 2
        low = _prefixes(items[:m], 1, combine)
        out = list(low)
        high = _prefixes(items[m:], 0, combine)
        out.extend(combine(h, low[m - 1]) for h in high)
        return out
    pairs = [combine(items[2 * j + 1], items[2 * j]) for j in range(n // 2)]
    if n % 2:
        pairs.append(items[n - 1])
    condensed = _prefixes(pairs, f - 1, combine)
    out: list[T] = [items[0]] + [None] * (n - 1)  # type: ignore[list-item]
    for j in range(n // 2):
        out[2 * j + 1] = condensed[j]
    for j in range(1, (n + 1) // 2):
        out[2 * j] = combine(items[2 * j], condensed[j - 1])
    if n % 2:
        out[n - 1] = condensed[-1]
    return out


@dataclass(frozen=True)
class PrefixNetwork:
    """Abstract prefix plan: combine steps over a growing slot list.

    Slots 0..n-1 are the inputs; step (hi, lo) appends the slot
    ``value[hi] o value[lo]``.  ``out_slots[i]`` holds the prefix over
    inputs 0..i.
    """

    n: int
    f: int
    steps: tuple[tuple[int, int], ...]
    out_slots: tuple[int, ...]

    def depth(self) -> int:
        depths = [0] * self.n
        for hi, lo in self.steps:
            depths.append(max(depths[hi], depths[lo]) + 1)
        return max(depths[s] for s in self.out_slots)

    def instantiate(self, inputs: Sequence[T],
                    combine: Callable[[T, T], T]) -> list[T]:
        values: list[T] = list(inputs)
        for hi, lo in self.steps:
            values.append(combine(values[hi], values[lo]))
        return [values[s] for s in self.out_slots]


def prefix_plan(n: int, f: int) -> PrefixNetwork:
    """Prefix plan with depth <= ceil(log2 n) + f, steps <= 2(1 + 2^-f) n."""
    if n < 1:
        raise ValueError("prefix network needs n >= 1")
    _check_f(n, f)
    steps: list[tuple[int, int]] = []
    counter = n

    def combine(hi: int, lo: int) -> int:
        nonlocal counter
        steps.append((hi, lo))
        counter += 1
        return counter - 1

    outs = _prefixes(list(range(n)), f, combine)
    return PrefixNetwork(n, f, tuple(steps), tuple(outs))


def and_prefix_circuit(circuit: Circuit, inputs: Sequence[NodeId],
                       f: int) -> list[NodeId]:
    """AND-prefix outputs Z_i = inputs[i] & ... & inputs[0] (Z_0 is a wire)."""
    if not inputs:
        raise ValueError("prefix circuit needs at least one input")
    _check_f(len(inputs), f)
    return _prefixes(list(inputs), f,
                     lambda a, b: circuit.add_gate(GateKind.AND, a, b))


def lf_combined_adder(circuit: Circuit, p: Sequence[NodeId],
                      g: Sequence[NodeId], f: int
                      ) -> tuple[list[NodeId], list[NodeId]]:
    """Combined prefix adder: carries c_1..c_n and AND-prefix of p.

    Three gates per prefix step; the propagate component of output i equals
    p_i & ... & p_0, the generate component is the carry c_{i+1}.
    """
    if len(p) != len(g) or not g:
        raise ValueError("adder needs matching nonempty p/g lists")
    _check_f(len(g), f)

    def combine(hi: tuple[NodeId, NodeId],
                lo: tuple[NodeId, NodeId]) -> tuple[NodeId, NodeId]:
        y1, x1 = hi
        y0, x0 = lo
        t = circuit.add_gate(GateKind.AND, x1, y0)
        y = circuit.add_gate(GateKind.OR, y1, t)
        x = circuit.add_gate(GateKind.AND, x1, x0)
        return y, x

    outs = _prefixes(list(zip(g, p)), f, combine)
    return [y for y, _ in outs], [x for _, x in outs]


def ripple_adder(circuit: Circuit, p: Sequence[NodeId],
                 g: Sequence[NodeId]) -> list[NodeId]:
    """Carries by the literal recurrence c_{i+1} = g_i | (p_i & c_i).

    Depth and size are exactly 2n - 2 (c_1 = g_0 is a wire).
    """
    if len(p) != len(g) or not g:
        raise ValueError("adder needs matching nonempty p/g lists")
    carry = g[0]
    outs = [carry]
    for i in range(1, len(g)):
        t = circuit.add_gate(GateKind.AND, p[i], carry)
        carry = circuit.add_gate(GateKind.OR, g[i], t)
        outs.append(carry)
    return outs


def and_chain(circuit: Circuit, inputs: Sequence[NodeId]) -> list[NodeId]:
    """Serial AND prefix (depth i at output i); used by the halved adder."""
    outs = [inputs[0]]
    for node in inputs[1:]:
        outs.append(circuit.add_gate(GateKind.AND, node, outs[-1]))
    return outs


def halved_adder(circuit: Circuit, p: Sequence[NodeId],
                 g: Sequence[NodeId]) -> list[NodeId]:
    """Linear-size adder with depth <= n + 2 and size <= 3.5 n.

    Two ripple adders on the halves; the low half's top carry doubles as
    the AND-OR path of the two-part scheme (shared gates) and a serial AND
    chain serves as the prefix circuit on the high half.
    """
    if len(p) != len(g):
        raise ValueError("adder needs matching p/g lists")
    n = len(g)
    if n == 0:
        return []
    if n == 1:
        return [g[0]]
    k_r = (n + 1) // 2
    low = ripple_adder(circuit, p[:k_r], g[:k_r])
    high = ripple_adder(circuit, p[k_r:], g[k_r:])
    prefix = and_chain(circuit, p[k_r:])
    carry_in = low[-1]
    outs = list(low)
    for i in range(n - k_r):
        t = circuit.add_gate(GateKind.AND, prefix[i], carry_in)
        outs.append(circuit.add_gate(GateKind.OR, high[i], t))
    return outs
