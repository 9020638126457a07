"""Adder constructions: two-part scheme, A1, the l-part linearization, and
the linear-size families A2/A3, plus reference constructions.

All builders take propagate/generate node lists and return the carry nodes
c_1..c_n; none of them ever reads p[0].  The convenience entry point
:func:`build_adder` creates a fresh circuit with interleaved inputs
p0, g0, p1, g1, ... and named outputs c1..cn.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .aop import synth_carry_aop
from .circuit import Circuit, GateKind, NodeId
from .prefix import (and_prefix_circuit, halved_adder, lf_combined_adder,
                     ripple_adder)

AdderFn = Callable[[Circuit, Sequence[NodeId], Sequence[NodeId]], list[NodeId]]
PrefixFn = Callable[[Circuit, Sequence[NodeId]], list[NodeId]]
AopFn = Callable[[Circuit, Sequence[NodeId], Sequence[NodeId]], NodeId]


def _guarded_f(n: int, f: int) -> int:
    cap = (n - 1).bit_length() if n > 1 else 0
    return min(f, cap)


def _lf2_prefix(circuit: Circuit, zs: Sequence[NodeId]) -> list[NodeId]:
    return and_prefix_circuit(circuit, zs, _guarded_f(len(zs), 2))


def two_part_adder(circuit: Circuit, p: Sequence[NodeId], g: Sequence[NodeId],
                   mk_adder: AdderFn, mk_prefix: PrefixFn,
                   mk_aop: AopFn) -> list[NodeId]:
    """Split into low ceil(n/2) and high floor(n/2) pairs.

    Low carries come from the low adder; high carries are
    out_i(high adder) | (out_i(high prefix) & aop(low part)), two gates
    each.  The low part's top carry is computed twice (once by the adder,
    once as the AND-OR path); the adder output is the one emitted.
    """
    n = len(g)
    if n < 2:
        raise ValueError("two-part construction needs n >= 2")
    k_r = (n + 1) // 2
    low = mk_adder(circuit, p[:k_r], g[:k_r])
    high = mk_adder(circuit, p[k_r:], g[k_r:])
    prefix = mk_prefix(circuit, p[k_r:])
    aop = mk_aop(circuit, p[:k_r], g[:k_r])
    outs = list(low)
    for i in range(n - k_r):
        t = circuit.add_gate(GateKind.AND, prefix[i], aop)
        outs.append(circuit.add_gate(GateKind.OR, high[i], t))
    return outs


# ----------------------------------------------------------------------
# A1: recursive two-part adder with depth log2 n + log2 log2 n + 2.65


@functools.lru_cache(maxsize=None)
def _lf_adder_metrics(n: int) -> tuple[int, int]:
    """Exact (depth, size) of the combined f = 0 prefix adder, by running
    the plan over depth pairs instead of building gates."""
    from .prefix import _prefixes

    size = 0

    def combine(hi: tuple[int, int], lo: tuple[int, int]) -> tuple[int, int]:
        nonlocal size
        size += 3
        t = max(hi[1], lo[0]) + 1
        return max(hi[0], t) + 1, max(hi[1], lo[1]) + 1

    outs = _prefixes([(0, 0)] * n, 0, combine)
    return max(y for y, _ in outs), size


@functools.lru_cache(maxsize=None)
def _lf_prefix_metrics(n: int, f: int) -> tuple[int, int]:
    """Exact (max output depth, size) of the AND-prefix network."""
    from .prefix import _prefixes

    size = 0

    def combine(hi: int, lo: int) -> int:
        nonlocal size
        size += 1
        return max(hi, lo) + 1

    return max(_prefixes([0] * n, f, combine)), size


@functools.lru_cache(maxsize=None)
def _aop_metrics(pairs: int) -> tuple[int, int]:
    """Exact (depth, size) of the carry AND-OR path on ``pairs`` pairs,
    measured on one scratch build (the construction is size-deterministic)."""
    scratch = Circuit()
    p = [scratch.add_input(f"p{i}") for i in range(pairs)]
    g = [scratch.add_input(f"g{i}") for i in range(pairs)]
    node = synth_carry_aop(scratch, p, g)
    return scratch.node_depth(node), scratch.size()


@functools.lru_cache(maxsize=None)
def _a1_metrics(n: int) -> tuple[int, int, str]:
    """(depth, size, tag) of the chosen A1 realization, exactly.

    The two-part composite depth is max(d(A_kr), d(A_kl) + 1, d(S) + 2,
    d(AOP) + 2): the per-output maxima of independent components distribute
    through the concatenation gates, so no candidate has to be built to be
    compared.  The choice is lexicographic (depth, size); the prefix adder
    wins ties.
    """
    if n <= 3:
        d = max(0, 2 * n - 2)
        return d, d, "ripple"
    candidates = []
    lf_d, lf_s = _lf_adder_metrics(n)
    candidates.append((lf_d, lf_s, "lf0"))
    k_l, k_r = n // 2, (n + 1) // 2
    dl, sl, _ = _a1_metrics(k_l)
    dr, sr, _ = _a1_metrics(k_r)
    dp, sp = _lf_prefix_metrics(k_l, _guarded_f(k_l, 2))
    da, sa = _aop_metrics(k_r)
    candidates.append((max(dr, dl + 1, dp + 2, da + 2),
                       sr + sl + sp + sa + 2 * k_l, "split"))
    return min(candidates, key=lambda c: c[:2])


def _a1_plan(n: int) -> str:
    return _a1_metrics(n)[2]


def _a1_build(circuit: Circuit, p: Sequence[NodeId], g: Sequence[NodeId],
              tag: str) -> list[NodeId]:
    if tag == "ripple":
        return ripple_adder(circuit, p, g)
    if tag == "lf0":
        return lf_combined_adder(circuit, p, g, 0)[0]
    return two_part_adder(circuit, p, g, adder_a1_rec, _lf2_prefix,
                          synth_carry_aop)


def adder_a1_rec(circuit: Circuit, p: Sequence[NodeId],
                 g: Sequence[NodeId]) -> list[NodeId]:
    """A1 with the internal leaf rule (ripple for n <= 3) allowed."""
    return _a1_build(circuit, p, g, _a1_plan(len(g)))


def adder_a1(circuit: Circuit, p: Sequence[NodeId],
             g: Sequence[NodeId]) -> list[NodeId]:
    """Adder with depth <= log2 n + log2 log2 n + 2.65, size <= 6.2 n log2 n."""
    if len(g) < 3:
        raise ValueError("a1 needs n >= 3")
    return adder_a1_rec(circuit, p, g)


# ----------------------------------------------------------------------
# l-part linearization framework


@dataclass(frozen=True)
class LPartPlan:
    """Partition of n input pairs into l parts of size at most k.

    Parts are consecutive from the low end; only the last part may be
    short.  ``offsets[j]`` is the number of pairs below part j.
    """

    n: int
    k: int

    def __post_init__(self) -> None:
        if not (self.n >= 2 and 1 <= self.k < self.n):
            raise ValueError(f"need n >= 2 and 1 <= k < n, got {self!r}")

    @property
    def l(self) -> int:
        return -(-self.n // self.k)

    @property
    def sizes(self) -> list[int]:
        full = self.n // self.k if self.n % self.k == 0 else self.l - 1
        out = [self.k] * full
        if self.n % self.k:
            out.append(self.n % self.k)
        return out

    @property
    def offsets(self) -> list[int]:
        out, acc = [], 0
        for size in self.sizes:
            out.append(acc)
            acc += size
        return out


def l_part_adder(circuit: Circuit, p: Sequence[NodeId], g: Sequence[NodeId],
                 plan: LPartPlan, part_adder: Optional[AdderFn],
                 part_prefix: Optional[PrefixFn], part_aop: AopFn,
                 spine_adder: AdderFn,
                 joint_part: Optional[Callable] = None
                 ) -> tuple[list[NodeId], list[NodeId]]:
    """Linearization framework over ``plan``.

    Per part j >= 1 an adder, a full AND-prefix over the part's p-inputs
    and an AND-OR path (the part's local top carry) are built -- either via
    ``part_adder``/``part_prefix`` or jointly via ``joint_part`` (a combined
    prefix adder returning (carries, prefixes)).  The spine adder runs on
    the l pairs (full part prefix, part AND-OR path); its j-th carry is the
    carry into part j, so each part-boundary carry is emitted straight from
    the spine and the in-part carries need two concatenation gates each.

    Returns (carries c_1..c_n, spine carries).
    """
    n = len(g)
    if n != plan.n:
        raise ValueError("plan size mismatch")
    sizes, offsets, l = plan.sizes, plan.offsets, plan.l
    outs: list[Optional[NodeId]] = [None] * (n + 1)

    lo, nj = offsets[0], sizes[0]
    if joint_part is not None:
        part0, _ = joint_part(circuit, p[lo:lo + nj], g[lo:lo + nj])
    else:
        part0 = part_adder(circuit, p[lo:lo + nj], g[lo:lo + nj])
    for i in range(1, nj + 1):
        outs[i] = part0[i - 1]
    aop0 = part_aop(circuit, p[lo:lo + nj], g[lo:lo + nj])
    # pair 0 of the spine: the adder never reads its propagate input, so the
    # AND-OR path node is reused for that slot
    spine_p: list[NodeId] = [aop0]
    spine_g: list[NodeId] = [aop0]
    built = []
    for j in range(1, l):
        lo, nj = offsets[j], sizes[j]
        if joint_part is not None:
            part, prefix = joint_part(circuit, p[lo:lo + nj], g[lo:lo + nj])
        else:
            part = part_adder(circuit, p[lo:lo + nj], g[lo:lo + nj])
            prefix = part_prefix(circuit, p[lo:lo + nj])
        spine_p.append(prefix[nj - 1])
        spine_g.append(part_aop(circuit, p[lo:lo + nj], g[lo:lo + nj]))
        built.append((j, lo, nj, part, prefix))
    spine = spine_adder(circuit, spine_p, spine_g)
    for j, lo, nj, part, prefix in built:
        carry_in = spine[j - 1]
        outs[lo] = carry_in
        # the spine supplies the next boundary carry, so the last
        # concatenation pair is only needed for the final part
        top = nj if j == l - 1 else nj - 1
        for i in range(1, top + 1):
            t = circuit.add_gate(GateKind.AND, prefix[i - 1], carry_in)
            outs[lo + i] = circuit.add_gate(GateKind.OR, part[i - 1], t)
    return outs[1:], spine


# ----------------------------------------------------------------------
# the linear-size families A2 / A3


def adder_a2(circuit: Circuit, p: Sequence[NodeId],
             g: Sequence[NodeId]) -> list[NodeId]:
    """Linear-size adder, depth <= log2 n + log2 log2 n + log2 log2 log2 n + 6.6.

    Combined Ladner-Fischer adder (f = 0) up to n = 1024; above that the
    l-part framework with k = ceil(log2 n), halved adders and f = 2 prefix
    circuits per part, and an A1 spine.
    """
    n = len(g)
    if n < 4:
        raise ValueError("a2 needs n >= 4")
    if n <= 1024:
        return lf_combined_adder(circuit, p, g, 0)[0]
    plan = LPartPlan(n, math.ceil(math.log2(n)))
    outs, _ = l_part_adder(circuit, p, g, plan, halved_adder, _lf2_prefix,
                           synth_carry_aop, adder_a1_rec)
    return outs


def adder_a3(circuit: Circuit, p: Sequence[NodeId],
             g: Sequence[NodeId]) -> list[NodeId]:
    """Linear-size adder trading one depth unit for size <= 16.7 n.

    Combined Ladner-Fischer adder (f = 0) up to n = 2048; above that the
    l-part framework with k = ceil(log2^2 n) where each part's adder and
    AND-prefix circuit share one combined f = 3 Ladner-Fischer network.
    """
    n = len(g)
    if n < 4:
        raise ValueError("a3 needs n >= 4")
    if n <= 2048:
        return lf_combined_adder(circuit, p, g, 0)[0]
    plan = LPartPlan(n, math.ceil(math.log2(n) ** 2))

    def joint(c: Circuit, pp: Sequence[NodeId], gg: Sequence[NodeId]):
        return lf_combined_adder(c, pp, gg, _guarded_f(len(gg), 3))

    outs, _ = l_part_adder(circuit, p, g, plan, None, None,
                           synth_carry_aop, adder_a1_rec, joint_part=joint)
    return outs


def per_carry_aop_adder(circuit: Circuit, p: Sequence[NodeId],
                        g: Sequence[NodeId]) -> list[NodeId]:
    """Every carry as an independent AND-OR path (quadratic size reference)."""
    if not g:
        raise ValueError("adder needs n >= 1")
    return [synth_carry_aop(circuit, p[:i], g[:i])
            for i in range(1, len(g) + 1)]


# ----------------------------------------------------------------------
# registry and convenience construction

ADDER_MIN_N = {"ripple": 1, "lf": 1, "halved": 1, "a1": 3, "a2": 4, "a3": 4,
               "percarry": 1}


def build_adder(construction: str, n: int, f: int = 0
                ) -> tuple[Circuit, list[NodeId]]:
    """Fresh adder circuit with inputs p0, g0, ..., outputs c1..cn."""
    if n < ADDER_MIN_N.get(construction, 1):
        raise ValueError(
            f"{construction} needs n >= {ADDER_MIN_N[construction]}, got {n}")
    circuit = Circuit()
    p: list[NodeId] = []
    g: list[NodeId] = []
    for i in range(n):
        p.append(circuit.add_input(f"p{i}"))
        g.append(circuit.add_input(f"g{i}"))
    if construction == "ripple":
        outs = ripple_adder(circuit, p, g)
    elif construction == "lf":
        outs = lf_combined_adder(circuit, p, g, f)[0]
    elif construction == "halved":
        outs = halved_adder(circuit, p, g)
    elif construction == "a1":
        outs = adder_a1(circuit, p, g)
    elif construction == "a2":
        outs = adder_a2(circuit, p, g)
    elif construction == "a3":
        outs = adder_a3(circuit, p, g)
    elif construction == "percarry":
        outs = per_carry_aop_adder(circuit, p, g)
    else:
        raise ValueError(f"unknown adder construction {construction!r}")
    for i, node in enumerate(outs, start=1):
        circuit.set_output(f"c{i}", node)
    return circuit, outs
