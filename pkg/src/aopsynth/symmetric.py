"""Delay-optimum symmetric trees, leftist circuits and triangular sets.

The size argument of the whole synthesis rests on three facts implemented
here:

* Huffman combining of the two earliest-arriving operands yields a symmetric
  tree with the optimum delay ``ceil(log2(sum 2^a))``.
* A leftist circuit (disjoint full binary trees over consecutive input
  blocks, sizes given by the binary decomposition of n, widest leftmost)
  admits O(log k) boundary queries: any consecutive input interval K is
  partitioned by at most ~2 log2 |K| maximal subtree roots.
* Huffman coding over those boundary roots (arrival = subtree depth) plus
  loose extra operands rebuilds a delay-optimum tree for K while reusing
  every gate below the boundary.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .circuit import Circuit, GateKind, NodeId

ArrivalItem = tuple[NodeId, int]

MAX_ARRIVAL = 63  # keeps sum(2^a) inside one 64-bit word


def huffman_tree(circuit: Circuit, kind: GateKind,
                 items: Sequence[ArrivalItem]) -> tuple[NodeId, int]:
    """Delay-optimum symmetric tree over (node, arrival) items.

    Repeatedly combines the two smallest delays; ties break FIFO (insertion
    sequence number) so results are deterministic.  Returns the root and the
    number of gates built (``len(items) - 1``).
    """
    if not items:
        raise ValueError("huffman_tree needs at least one item")
    heap = []
    for seq, (node, arrival) in enumerate(items):
        if not 0 <= arrival <= MAX_ARRIVAL:
            raise ValueError(f"arrival {arrival} outside 0..{MAX_ARRIVAL}")
        heap.append((arrival, seq, node))
    heapq.heapify(heap)
    seq = len(items)
    gates = 0
    while len(heap) > 1:
        a1, _, v1 = heapq.heappop(heap)
        a2, _, v2 = heapq.heappop(heap)
        g = circuit.add_gate(kind, v1, v2)
        gates += 1
        heapq.heappush(heap, (max(a1, a2) + 1, seq, g))
        seq += 1
    return heap[0][2], gates


def optimal_delay(arrivals: Iterable[int]) -> int:
    """The Huffman delay bound ceil(log2(sum of 2^arrival))."""
    total = sum(1 << a for a in arrivals)
    return (total - 1).bit_length()


@dataclass(frozen=True)
class TriangularSet:
    """Input subset of a leftist circuit as at most two consecutive runs.

    Runs are half-open position intervals, disjoint and left-to-right.  The
    sets produced during synthesis keep the shape "strictly increasing
    boundary depths, then strictly decreasing", which ``is_triangular``
    checks definitionally.
    """

    runs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prev = -1
        for lo, hi in self.runs:
            if not (prev <= lo < hi):
                raise ValueError(f"bad runs {self.runs}")
            prev = hi
        if len(self.runs) > 2:
            raise ValueError(f"more than two runs: {self.runs}")

    @staticmethod
    def from_runs(runs: Iterable[tuple[int, int]]) -> "TriangularSet":
        merged: list[list[int]] = []
        for lo, hi in runs:
            if lo >= hi:
                continue
            if merged and merged[-1][1] == lo:
                merged[-1][1] = hi
            else:
                merged.append([lo, hi])
        return TriangularSet(tuple((lo, hi) for lo, hi in merged))

    def __len__(self) -> int:
        return sum(hi - lo for lo, hi in self.runs)

    def positions(self) -> list[int]:
        return [p for lo, hi in self.runs for p in range(lo, hi)]

    def append_position(self, pos: int) -> "TriangularSet":
        """Extend by one input position lying right of the last run."""
        if self.runs and self.runs[-1][1] > pos:
            raise ValueError(f"position {pos} not right of {self.runs}")
        return TriangularSet.from_runs(list(self.runs) + [(pos, pos + 1)])


EMPTY_SET = TriangularSet(())


@dataclass(frozen=True)
class BoundaryVertex:
    node: NodeId
    depth: int
    lo: int   # leftmost input position covered
    hi: int   # rightmost input position covered (inclusive)


class LeftistCircuit:
    """Leftist symmetric circuit over an ordered input list in a shared arena.

    Built by carving full binary trees of sizes 2^k for the set bits of n in
    decreasing order.  Precomputes, per input position, the chain of "right
    descendants" (the depth-j node whose leftmost leaf is that input) so a
    boundary query runs in O(log |K|).
    """

    def __init__(self, circuit: Circuit, kind: GateKind,
                 inputs: Sequence[NodeId]) -> None:
        if not inputs:
            raise ValueError("leftist circuit needs at least one input")
        self.circuit = circuit
        self.kind = kind
        self.inputs = list(inputs)
        n = len(self.inputs)
        # rdesc[i][j] = node of depth j whose leftmost input is position i
        self.rdesc: list[list[NodeId]] = [[x] for x in self.inputs]
        self.node_hi: dict[NodeId, int] = {
            x: i for i, x in enumerate(self.inputs)}
        self.tree_roots: list[BoundaryVertex] = []
        self.gate_count = 0
        pos, rem = 0, n
        while rem >= 1:
            k = rem.bit_length() - 1
            level = self.inputs[pos:pos + (1 << k)]
            depth = 0
            while len(level) > 1:
                nxt = []
                for j in range(0, len(level), 2):
                    g = circuit.add_gate(kind, level[j], level[j + 1])
                    self.gate_count += 1
                    lo = pos + j * (1 << depth)
                    self.node_hi[g] = lo + (1 << (depth + 1)) - 1
                    self.rdesc[lo].append(g)
                    nxt.append(g)
                level = nxt
                depth += 1
            self.tree_roots.append(
                BoundaryVertex(level[0], k, pos, pos + (1 << k) - 1))
            pos += 1 << k
            rem -= 1 << k

    @property
    def n(self) -> int:
        return len(self.inputs)

    def pair_gate(self, pos: int) -> NodeId | None:
        """The depth-1 gate over positions (pos, pos+1) if the trees pair them."""
        chain = self.rdesc[pos]
        if len(chain) >= 2 and self.node_hi[chain[1]] == pos + 1:
            return chain[1]
        return None

    def boundary_interval(self, lo: int, hi: int) -> list[BoundaryVertex]:
        """B(K, S) for the consecutive positions K = [lo, hi], left to right.

        Uses j = min(floor(log2(hi - i + 1)), max right-descendant depth);
        both logs are exact integer bit-length computations.
        """
        out: list[BoundaryVertex] = []
        i = lo
        while i <= hi:
            chain = self.rdesc[i]
            j = min((hi - i + 1).bit_length() - 1, len(chain) - 1)
            node = chain[j]
            out.append(BoundaryVertex(node, j, i, self.node_hi[node]))
            i = self.node_hi[node] + 1
        return out

    def boundary(self, subset: TriangularSet) -> list[BoundaryVertex]:
        """Boundary vertices of a (triangular) subset, left to right."""
        out: list[BoundaryVertex] = []
        for lo, hi in subset.runs:
            out.extend(self.boundary_interval(lo, hi - 1))
        return out


def boundary_by_scan(leftist: LeftistCircuit,
                     positions: Iterable[int]) -> list[BoundaryVertex]:
    """O(n) definitional boundary computation (test oracle for det-B)."""
    member = set(positions)
    out: list[BoundaryVertex] = []
    for root in leftist.tree_roots:

        def walk(lo: int, depth: int) -> None:
            span = range(lo, lo + (1 << depth))
            if all(p in member for p in span):
                out.append(BoundaryVertex(
                    leftist.rdesc[lo][depth], depth, lo, lo + (1 << depth) - 1))
                return
            if depth == 0:
                return
            walk(lo, depth - 1)
            walk(lo + (1 << (depth - 1)), depth - 1)

        walk(root.lo, root.depth)
    out.sort(key=lambda b: b.lo)
    return out


def is_triangular(leftist: LeftistCircuit, positions: Iterable[int]) -> bool:
    """Definitional triangularity check (O(n) scan; test/assertion oracle).

    True iff the boundary tree sequence splits into an increasing part and a
    decreasing part, each covering a consecutive input interval.  The two
    parts need not be adjacent to each other.
    """
    seq = boundary_by_scan(leftist, positions)
    if len(seq) <= 1:
        return True

    def consecutive(part: list[BoundaryVertex]) -> bool:
        return all(a.hi + 1 == b.lo for a, b in zip(part, part[1:]))

    for j in range(len(seq)):
        inc, dec = seq[:j + 1], seq[j + 1:]
        if not (consecutive(inc) and consecutive(dec)):
            continue
        if any(a.depth >= b.depth for a, b in zip(inc, inc[1:])):
            continue
        if any(a.depth <= b.depth for a, b in zip(dec, dec[1:])):
            continue
        return True
    return False


def sym_prep(leftist: LeftistCircuit, subset: TriangularSet,
             extra: Sequence[ArrivalItem] = ()) -> tuple[NodeId, int]:
    """Delay-optimum symmetric tree over a triangular subset plus extras.

    Huffman coding over the boundary vertices (arrival = log2 of the input
    cone, i.e. the subtree depth) and the ``extra`` items; gates below the
    boundary are reused from the leftist circuit.  Returns (root, gates
    added); the gate count is at most |B| + len(extra) - 1, which for
    k = |subset| >= 3 is at most 2 log2 k + len(extra) - 2.
    """
    items = [(b.node, b.depth) for b in leftist.boundary(subset)]
    items.extend(extra)
    return huffman_tree(leftist.circuit, leftist.kind, items)


def extract_triangular_subset(
        leftist: LeftistCircuit, subset: TriangularSet
) -> tuple[TriangularSet, TriangularSet]:
    """Split off a power-of-two triangular subset K with |K| = 2^(d-1).

    ``d`` is determined by 2^(d-1) <= |subset| < 2^d.  Returns (K, rest);
    both are triangular again, and so is ``rest`` extended by the input
    directly right of the original set.
    """
    n = len(subset)
    if n < 1:
        raise ValueError("cannot extract from an empty set")
    trees = leftist.boundary(subset)
    d = n.bit_length()
    j0 = j1 = None
    for j, tree in enumerate(trees):
        if tree.depth == d - 1:
            j0 = j1 = j
            break
    if j0 is None:
        by_depth: dict[int, list[int]] = {}
        for j, tree in enumerate(trees):
            by_depth.setdefault(tree.depth, []).append(j)
        depth = max(dd for dd, js in by_depth.items() if len(js) >= 2)
        j0, j1 = by_depth[depth][0], by_depth[depth][-1]

    def as_set(parts: list[BoundaryVertex]) -> TriangularSet:
        return TriangularSet.from_runs((t.lo, t.hi + 1) for t in parts)

    carved = as_set(trees[j0:j1 + 1])
    rest = as_set(trees[:j0] + trees[j1 + 1:])
    assert len(carved) == 1 << (d - 1), (subset, carved)
    return carved, rest


# ----------------------------------------------------------------------
# small arithmetic helpers shared by the size analysis


def rho(n: int) -> int:
    """n for n <= 2, else floor(2 log2(n-1)); monotone increasing."""
    if n < 0:
        raise ValueError("rho is defined on nonnegative integers")
    if n <= 2:
        return n
    return _floor_2log2(n - 1)


def _floor_2log2(x: int) -> int:
    # floor(2 log2 x) for integer x >= 1, computed exactly: the answer is the
    # largest e with x*x >= 2^e.
    return (x * x).bit_length() - 1


def flodd(x: float) -> int:
    """Greatest odd integer <= x (x >= 1)."""
    if x < 1:
        raise ValueError(f"no odd integer <= {x} is positive")
    k = int(x + 1e-9)
    return k if k % 2 == 1 else k - 1
