"""Functional verification of circuits against the reference oracles."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import simulate
from .circuit import Circuit

EXHAUSTIVE_INPUT_CAP = 24
DEFAULT_TRIALS = 10_000
DEFAULT_SEED = 0xC1AC0DE

# An oracle maps a packed input block (num_inputs, W) to packed expected
# outputs (num_outputs, W), in the order of circuit.outputs.
Oracle = Callable[[np.ndarray], np.ndarray]


@dataclass
class Verdict:
    ok: bool
    mode: str
    assignments: int
    seed: Optional[int] = None
    counterexample: Optional[dict] = field(default=None)

    def __bool__(self) -> bool:
        return self.ok


def _compare_block(circuit: Circuit, oracle: Oracle, block: np.ndarray,
                   base: int, limit: int) -> Optional[dict]:
    nodes = [n for _, n in circuit.outputs]
    got = simulate.eval_block(circuit, block, nodes)
    want = oracle(block)
    diff = got ^ want
    if limit - base < block.shape[1] * 64:
        # mask lanes beyond the assignment count
        surplus = block.shape[1] * 64 - (limit - base)
        if surplus:
            mask = np.uint64((1 << (64 - surplus)) - 1) if surplus < 64 else np.uint64(0)
            diff[:, -1] &= mask
    bad = np.nonzero(diff)
    if bad[0].size == 0:
        return None
    row, word = int(bad[0][0]), int(bad[1][0])
    lane = word * 64 + (int(diff[row, word]) & -int(diff[row, word])).bit_length() - 1
    name = circuit.outputs[row][0]
    return {
        "output": name,
        "assignment": simulate.unpack_assignment(block, lane),
        "expected": int((int(want[row, word]) >> (lane % 64)) & 1),
        "got": int((int(got[row, word]) >> (lane % 64)) & 1),
        "index": base + lane,
    }


def verify_equivalence(circuit: Circuit, oracle: Oracle, mode: str = "random",
                       trials: int = DEFAULT_TRIALS,
                       seed: int = DEFAULT_SEED) -> Verdict:
    """Compare every declared output of ``circuit`` against ``oracle``.

    ``mode`` is ``"exhaustive"`` (all assignments; input count capped at
    EXHAUSTIVE_INPUT_CAP) or ``"random"`` (``trials`` uniform assignments
    plus the structured patterns all-zeros, all-ones and each single-hot
    vector).  Returns a :class:`Verdict` carrying the first counterexample
    on failure.
    """
    n = circuit.num_inputs
    if mode == "exhaustive":
        if n > EXHAUSTIVE_INPUT_CAP:
            raise ValueError(
                f"exhaustive verification capped at {EXHAUSTIVE_INPUT_CAP} "
                f"inputs (got {n}); use random mode")
        total = 1 << n
        for base, block in simulate.exhaustive_blocks(n):
            cex = _compare_block(circuit, oracle, block, base, total)
            if cex:
                return Verdict(False, mode, total, None, cex)
        return Verdict(True, mode, total)
    if mode == "random":
        block = simulate.random_block(n, trials, seed)
        total = trials + n + 2
        cex = _compare_block(circuit, oracle, block, 0, total)
        return Verdict(cex is None, mode, total, seed, cex)
    raise ValueError(f"unknown verification mode {mode!r}")


# ----------------------------------------------------------------------
# oracle adapters for the standard input layouts


def carry_oracle(n: int) -> Oracle:
    """For adders with inputs created as p_0, g_0, p_1, g_1, ..."""
    from .oracles import carry_words

    def oracle(block: np.ndarray) -> np.ndarray:
        return carry_words(block[0::2], block[1::2])

    return oracle


def aop_oracle(dual: bool = False) -> Oracle:
    from .oracles import aop_words

    def oracle(block: np.ndarray) -> np.ndarray:
        return aop_words(block, dual)

    return oracle


def extended_aop_oracle(n_sym: int, dual: bool = False) -> Oracle:
    from .oracles import extended_aop_words

    def oracle(block: np.ndarray) -> np.ndarray:
        return extended_aop_words(block[:n_sym], block[n_sym:], dual)

    return oracle


def circuit_oracle(reference: Circuit) -> Oracle:
    """Treat another circuit as the oracle (used for round-trip checks)."""

    def oracle(block: np.ndarray) -> np.ndarray:
        nodes = [n for _, n in reference.outputs]
        return simulate.eval_block(reference, block, nodes)

    return oracle
