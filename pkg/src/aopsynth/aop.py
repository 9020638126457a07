"""Depth optimization of (extended) AND-OR paths with linear-size sharing.

The synthesizer realizes f(s, t) = AND(s) & (t0 & (t1 | (t2 & ...))) or its
dual with depth at most d_min(n, m) while keeping the gate count linear.
Inputs are split into two parity classes: the symmetric inputs together with
the even-offset alternating inputs form class 0, the odd-offset alternating
inputs class 1.  In shared mode one leftist circuit per class is built up
front and every symmetric subtree is rebuilt from its boundary vertices by
Huffman coding; in formula mode symmetric trees are built fresh from the
raw inputs, which yields a formula circuit with fanout bounded by depth.

Dispatch per call (d = d_min(n, m)):

* m <= 2: one delay-optimum symmetric tree over s, t0 (and t1).
* d <= 3: fixed small patterns (m = 3: Sym(s, t0, t1|t2); m = 4 and m = 5:
  depth-3 factored forms whose pair gates are taken from the leftist
  circuits when present).
* n >= 2^(d-1): symmetric split; peel off a power-of-two triangular subset.
* m <= mu(d-1, 0): simple split; peel off all of s.
* otherwise: alternating split with odd prefix length k = flodd(mu(d-1, n)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .bounds import EPS, d_min, mu
from .circuit import Circuit, GateKind, NodeId
from .symmetric import (EMPTY_SET, ArrivalItem, LeftistCircuit, TriangularSet,
                        extract_triangular_subset, flodd, huffman_tree)

GATE_CATEGORIES = ("leftist", "alt_split", "base_case", "sym_tree",
                   "split_concat")


@dataclass
class AopContext:
    """Shared state of one top-level synthesis run."""

    circuit: Circuit
    mode: str
    n_sym: int
    t_nodes: list[NodeId]
    class_inputs: tuple[list[NodeId], list[NodeId]]
    class_kinds: tuple[GateKind, GateKind]
    leftist: tuple[Optional[LeftistCircuit], Optional[LeftistCircuit]]
    counters: dict[str, int] = field(
        default_factory=lambda: {c: 0 for c in GATE_CATEGORIES})

    def position(self, j: int) -> int:
        """Position of alternating input t_j inside its parity class."""
        return self.n_sym + j // 2 if j % 2 == 0 else j // 2


def _make_context(circuit: Circuit, s_nodes: Sequence[NodeId],
                  t_nodes: Sequence[NodeId], dual: bool,
                  mode: str) -> AopContext:
    if mode not in ("shared", "formula"):
        raise ValueError(f"unknown mode {mode!r}")
    kind0 = GateKind.OR if dual else GateKind.AND
    class0 = list(s_nodes) + [t_nodes[j] for j in range(0, len(t_nodes), 2)]
    class1 = [t_nodes[j] for j in range(1, len(t_nodes), 2)]
    leftist: list[Optional[LeftistCircuit]] = [None, None]
    ctx = AopContext(
        circuit=circuit, mode=mode, n_sym=len(s_nodes),
        t_nodes=list(t_nodes),
        class_inputs=(class0, class1),
        class_kinds=(kind0, kind0.dual),
        leftist=(None, None))
    if mode == "shared":
        if class0:
            leftist[0] = LeftistCircuit(circuit, kind0, class0)
            ctx.counters["leftist"] += leftist[0].gate_count
        if class1:
            leftist[1] = LeftistCircuit(circuit, kind0.dual, class1)
            ctx.counters["leftist"] += leftist[1].gate_count
        ctx.leftist = (leftist[0], leftist[1])
    return ctx


def _sym_tree(ctx: AopContext, cls: int, subset: TriangularSet,
              extra: Sequence[ArrivalItem] = ()) -> tuple[NodeId, int]:
    """Delay-optimum symmetric tree over a class subset plus loose items."""
    if ctx.mode == "shared":
        lt = ctx.leftist[cls]
        items = [(b.node, b.depth) for b in lt.boundary(subset)]
    else:
        inputs = ctx.class_inputs[cls]
        items = [(inputs[p], 0) for p in subset.positions()]
    items.extend(extra)
    return huffman_tree(ctx.circuit, ctx.class_kinds[cls], items)


def _pair_gate(ctx: AopContext, cls: int, pos: int,
               kind: GateKind) -> tuple[NodeId, int]:
    """Gate over class inputs at (pos, pos+1), reused from the leftist
    circuit when it pairs exactly these two inputs with the right kind."""
    if ctx.mode == "shared" and kind == ctx.class_kinds[cls]:
        reused = ctx.leftist[cls].pair_gate(pos)
        if reused is not None:
            return reused, 0
    inputs = ctx.class_inputs[cls]
    return ctx.circuit.add_gate(kind, inputs[pos], inputs[pos + 1]), 1


def _synth(ctx: AopContext, s: TriangularSet, a: int, m: int,
           cls: int) -> NodeId:
    """Realize the extended AND-OR path over s and t[a .. a+m-1].

    ``cls`` is the parity class holding s and t_a; the gate kind of that
    class is the outer operation of the current (possibly dualized) call.
    """
    circuit = ctx.circuit
    op = ctx.class_kinds[cls]
    dop = op.dual
    n = len(s)
    assert m >= 1 or n >= 1
    assert m == 0 or (a % 2) == (0 if cls == 0 else 1)

    def t_node(j: int) -> NodeId:
        return ctx.t_nodes[a + j]

    def with_t0() -> TriangularSet:
        return s.append_position(ctx.position(a))

    if m == 0:
        root, g = _sym_tree(ctx, cls, s)
        ctx.counters["base_case"] += g
        return root
    if m <= 2:
        extra = [(t_node(1), 0)] if m == 2 else []
        root, g = _sym_tree(ctx, cls, with_t0(), extra)
        ctx.counters["base_case"] += g
        return root

    d = d_min(n, m)
    if d <= 3:
        if m == 3:
            # Sym(s, t0, t1 | t2); the inner gate mixes parities, so it is
            # always fresh.
            u = circuit.add_gate(dop, t_node(1), t_node(2))
            root, g = _sym_tree(ctx, cls, with_t0(), [(u, 1)])
            ctx.counters["base_case"] += g + 1
            return root
        if m == 4:
            # Sym(s, t0) & (t1 | (t2 & t3)) at depth 3 (n <= 2).
            sym, g = _sym_tree(ctx, cls, with_t0())
            inner = circuit.add_gate(op, t_node(2), t_node(3))
            right = circuit.add_gate(dop, t_node(1), inner)
            root = circuit.add_gate(op, sym, right)
            ctx.counters["base_case"] += g + 3
            return root
        # m == 5, n <= 1: (Sym(s, t0) & (t1 | t2)) & ((t1 | t3) | t4); the
        # t1|t3 gate pairs adjacent same-class inputs and is reused from the
        # leftist circuit whenever it exists there.
        sym, g1 = _sym_tree(ctx, cls, with_t0())
        u1 = circuit.add_gate(dop, t_node(1), t_node(2))
        left = circuit.add_gate(op, sym, u1)
        u2, g2 = _pair_gate(ctx, 1 - cls, ctx.position(a + 1), dop)
        right = circuit.add_gate(dop, u2, t_node(4))
        root = circuit.add_gate(op, left, right)
        ctx.counters["base_case"] += g1 + g2 + 4
        return root

    if n >= 1 << (d - 1):
        # symmetric split: carve a triangular subset of exactly 2^(d-1)
        # inputs; both pieces stay triangular.
        if ctx.mode == "shared":
            carved, rest = extract_triangular_subset(ctx.leftist[cls], s)
        else:
            carved, rest = _formula_split(s, d)
        sym, g = _sym_tree(ctx, cls, carved)
        ctx.counters["sym_tree"] += g
        sub = _synth(ctx, rest, a, m, cls)
        ctx.counters["split_concat"] += 1
        return circuit.add_gate(op, sym, sub)

    if m <= mu(d - 1, 0) + EPS:
        # simple split: all of s comes off as one symmetric tree.
        assert n >= 1
        sym, g = _sym_tree(ctx, cls, s)
        ctx.counters["sym_tree"] += g
        sub = _synth(ctx, EMPTY_SET, a, m, cls)
        ctx.counters["split_concat"] += 1
        return circuit.add_gate(op, sym, sub)

    # alternating split with odd prefix length k
    k = flodd(mu(d - 1, n))
    assert k % 2 == 1 and 1 <= k < m
    assert m - k <= mu(d - 1, (k - 1) // 2) + EPS
    left = _synth(ctx, s, a, k, cls)
    if k >= 3:
        lo = ctx.position(a + 1)
        shat = TriangularSet(((lo, lo + (k - 1) // 2),))
    else:
        shat = EMPTY_SET
    right = _synth(ctx, shat, a + k, m - k, 1 - cls)
    ctx.counters["alt_split"] += 1
    return circuit.add_gate(op, left, right)


def _formula_split(s: TriangularSet, d: int
                   ) -> tuple[TriangularSet, TriangularSet]:
    """Formula-mode stand-in for the triangular extraction: any 2^(d-1)
    inputs do, since nothing is shared."""
    k = 1 << (d - 1)
    positions = s.positions()
    return (TriangularSet.from_runs((p, p + 1) for p in positions[:k]),
            TriangularSet.from_runs((p, p + 1) for p in positions[k:]))


def synth_extended_aop(circuit: Circuit, s_nodes: Sequence[NodeId],
                       t_nodes: Sequence[NodeId], dual: bool = False,
                       mode: str = "shared") -> tuple[NodeId, AopContext]:
    """Build f(s, t) (or f* when ``dual``) over existing nodes.

    Returns the output node and the context carrying gate-category counters.
    """
    if len(s_nodes) + len(t_nodes) < 1:
        raise ValueError("extended AND-OR path needs at least one input")
    ctx = _make_context(circuit, s_nodes, t_nodes, dual, mode)
    s = TriangularSet(((0, len(s_nodes)),)) if s_nodes else EMPTY_SET
    root = _synth(ctx, s, 0, len(t_nodes), 0)
    return root, ctx


def synth_aop_node(circuit: Circuit, t_nodes: Sequence[NodeId],
                   dual: bool = False, mode: str = "shared") -> NodeId:
    """Build the plain AND-OR path g(t) / g*(t) over existing nodes."""
    if len(t_nodes) == 1:
        return t_nodes[0]
    root, _ = synth_extended_aop(circuit, (), t_nodes, dual, mode)
    return root


def build_aop(m: int, dual: bool = False, mode: str = "shared"
              ) -> tuple[Circuit, AopContext]:
    """Fresh circuit for an AND-OR path on m >= 2 inputs t0..t_{m-1}."""
    if m < 2:
        raise ValueError("AND-OR path synthesis needs m >= 2")
    circuit = Circuit()
    t_nodes = [circuit.add_input(f"t{j}") for j in range(m)]
    root, ctx = synth_extended_aop(circuit, (), t_nodes, dual, mode)
    circuit.set_output("gstar" if dual else "g", root)
    return circuit, ctx


def build_extended_aop(n: int, m: int, dual: bool = False,
                       mode: str = "shared") -> tuple[Circuit, AopContext]:
    """Fresh circuit for f(s, t) with n symmetric and m alternating inputs."""
    if n + m < 1:
        raise ValueError("extended AND-OR path needs at least one input")
    circuit = Circuit()
    s_nodes = [circuit.add_input(f"s{i}") for i in range(n)]
    t_nodes = [circuit.add_input(f"t{j}") for j in range(m)]
    root, ctx = synth_extended_aop(circuit, s_nodes, t_nodes, dual, mode)
    circuit.set_output("fstar" if dual else "f", root)
    return circuit, ctx


def synth_carry_aop(circuit: Circuit, p: Sequence[NodeId],
                    g: Sequence[NodeId], mode: str = "shared") -> NodeId:
    """Carry c_n as one AND-OR path g*(g_{n-1}, p_{n-1}, ..., p_1, g_0).

    The adder constructions use this for their per-part top carries; p[0]
    is never referenced.
    """
    n = len(g)
    if n == 1:
        return g[0]
    t: list[NodeId] = []
    for i in range(n - 1, 0, -1):
        t.append(g[i])
        t.append(p[i])
    t.append(g[0])
    return synth_aop_node(circuit, t, dual=True, mode=mode)


def gate_report(ctx: AopContext) -> dict[str, int]:
    """Gate counts by category plus the derived additional-gate total."""
    report = dict(ctx.counters)
    report["additional"] = sum(
        v for k, v in ctx.counters.items() if k != "leftist")
    report["total"] = report["additional"] + ctx.counters["leftist"]
    return report
