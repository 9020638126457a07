"""Arena-based DAG representation of {AND2, OR2} circuits.

A :class:`Circuit` is an append-only arena of nodes.  Every node is either an
input (a named Boolean variable) or a two-input gate.  Because gates may only
reference nodes that already exist, creation order is a topological order and
acyclicity holds by construction.  Per-node depth is maintained incrementally
on every append.

Node handles are plain ``int`` indices into the arena (``NodeId``); they are
only meaningful for the circuit that issued them.
"""

from __future__ import annotations

from array import array
from enum import IntEnum
from typing import Sequence

NodeId = int

# Arena node tags.  Inputs are tagged 0 so gate tags coincide with GateKind.
_INPUT = 0


class GateKind(IntEnum):
    AND = 1
    OR = 2

    @property
    def dual(self) -> "GateKind":
        return GateKind.OR if self is GateKind.AND else GateKind.AND


class CircuitError(ValueError):
    """Structural misuse of a circuit (bad node handle, arity, ...)."""


class Circuit:
    """Monotone gate DAG over the basis {AND2, OR2}.

    The arena stores four parallel arrays (tag, left, right, depth).  Inputs
    have depth 0; a gate's depth is ``1 + max(depth(left), depth(right))``.
    ``size`` counts gates only.  Outputs are an ordered list of named node
    references; several outputs may point at the same node and an output may
    have successors.

    A circuit is single-writer while under construction and safely shareable
    for concurrent evaluation and export once construction is done.
    """

    __slots__ = ("_tag", "_left", "_right", "_depth", "_inputs", "_labels",
                 "outputs")

    def __init__(self) -> None:
        self._tag = array("b")
        self._left = array("q")
        self._right = array("q")
        self._depth = array("q")
        self._inputs = array("q")
        self._labels: list[str] = []
        self.outputs: list[tuple[str, NodeId]] = []

    # ------------------------------------------------------------------
    # construction

    def add_input(self, label: str) -> NodeId:
        """Append an input node.  Labels are metadata and may repeat."""
        node = len(self._tag)
        self._tag.append(_INPUT)
        self._left.append(-1)
        self._right.append(-1)
        self._depth.append(0)
        self._inputs.append(node)
        self._labels.append(label)
        return node

    def add_gate(self, kind: GateKind, left: NodeId, right: NodeId) -> NodeId:
        """Append a gate over two existing nodes."""
        node = len(self._tag)
        if not (0 <= left < node and 0 <= right < node):
            raise CircuitError(
                f"gate operands ({left}, {right}) must reference existing "
                f"nodes (arena holds {node})")
        self._tag.append(int(kind))
        self._left.append(left)
        self._right.append(right)
        dl = self._depth[left]
        dr = self._depth[right]
        self._depth.append((dl if dl >= dr else dr) + 1)
        return node

    def set_output(self, name: str, node: NodeId) -> None:
        if not 0 <= node < len(self._tag):
            raise CircuitError(f"output {name!r} references unknown node {node}")
        self.outputs.append((name, node))

    # ------------------------------------------------------------------
    # basic queries

    def __len__(self) -> int:
        return len(self._tag)

    @property
    def num_nodes(self) -> int:
        return len(self._tag)

    @property
    def num_inputs(self) -> int:
        return len(self._inputs)

    def input_nodes(self) -> list[NodeId]:
        return list(self._inputs)

    def input_labels(self) -> list[str]:
        return list(self._labels)

    def is_input(self, node: NodeId) -> bool:
        return self._tag[node] == _INPUT

    def kind(self, node: NodeId) -> GateKind:
        tag = self._tag[node]
        if tag == _INPUT:
            raise CircuitError(f"node {node} is an input, not a gate")
        return GateKind(tag)

    def children(self, node: NodeId) -> tuple[NodeId, NodeId]:
        if self._tag[node] == _INPUT:
            raise CircuitError(f"node {node} is an input, not a gate")
        return self._left[node], self._right[node]

    def node_depth(self, node: NodeId) -> int:
        return self._depth[node]

    def size(self) -> int:
        """Number of gates."""
        return len(self._tag) - len(self._inputs)

    def depth(self) -> int:
        """Maximum gate count on a path ending in an output.

        Falls back to the deepest node in the arena when no outputs have been
        declared (convenient for ad-hoc circuits in tests).
        """
        if self.outputs:
            return max(self._depth[n] for _, n in self.outputs)
        return max(self._depth, default=0)

    def fanout(self) -> int:
        """Maximum successor count over all nodes."""
        counts = [0] * len(self._tag)
        left, right, tag = self._left, self._right, self._tag
        for node in range(len(tag)):
            if tag[node] != _INPUT:
                counts[left[node]] += 1
                counts[right[node]] += 1
        return max(counts, default=0)

    # ------------------------------------------------------------------
    # semantics

    def evaluate(self, assignment: Sequence[int]) -> list[int]:
        """Evaluate all outputs under one assignment (one bit per input).

        This is the simple per-assignment path; use :mod:`aopsynth.simulate`
        for bulk bit-parallel evaluation.
        """
        if len(assignment) != len(self._inputs):
            raise CircuitError(
                f"assignment has {len(assignment)} bits, circuit has "
                f"{len(self._inputs)} inputs")
        vals = [0] * len(self._tag)
        tag, left, right = self._tag, self._left, self._right
        next_input = 0
        for node in range(len(tag)):
            t = tag[node]
            if t == _INPUT:
                vals[node] = 1 if assignment[next_input] else 0
                next_input += 1
            elif t == GateKind.AND:
                vals[node] = vals[left[node]] & vals[right[node]]
            else:
                vals[node] = vals[left[node]] | vals[right[node]]
        return [vals[n] for _, n in self.outputs]

    def dualize(self) -> "Circuit":
        """Return the structural dual: every AND becomes OR and vice versa.

        Shape, input labels and outputs are preserved by index.
        """
        dual = Circuit()
        dual._tag = array("b", self._tag)
        for node in range(len(dual._tag)):
            if dual._tag[node] != _INPUT:
                dual._tag[node] = int(GateKind(dual._tag[node]).dual)
        dual._left = array("q", self._left)
        dual._right = array("q", self._right)
        dual._depth = array("q", self._depth)
        dual._inputs = array("q", self._inputs)
        dual._labels = list(self._labels)
        dual.outputs = list(self.outputs)
        return dual

    # ------------------------------------------------------------------
    # consistency helpers (used by tests to cross-check the caches)

    def recompute_depths(self) -> list[int]:
        """Recompute all node depths from scratch, ignoring the cache."""
        depths = [0] * len(self._tag)
        tag, left, right = self._tag, self._left, self._right
        for node in range(len(tag)):
            if tag[node] != _INPUT:
                dl = depths[left[node]]
                dr = depths[right[node]]
                depths[node] = (dl if dl >= dr else dr) + 1
        return depths

    def check_topological(self) -> None:
        """Assert that every gate references strictly smaller indices."""
        tag, left, right = self._tag, self._left, self._right
        for node in range(len(tag)):
            if tag[node] != _INPUT:
                if not (left[node] < node and right[node] < node):
                    raise CircuitError(f"gate {node} violates creation order")

    def raw_arrays(self):
        """Expose (tag, left, right) arrays for the evaluation backends."""
        return self._tag, self._left, self._right
