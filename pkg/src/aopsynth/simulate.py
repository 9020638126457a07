"""Bulk bit-parallel circuit evaluation.

Assignments are packed 64 per ``uint64`` word; a block is a matrix with one
row per circuit input and one column per word.  The inner gate loop runs in
the compiled Cython kernel when available and falls back to a numpy twin
otherwise (``BACKEND`` tells which one was picked; ``AOPSYNTH_FORCE_PY=1``
forces the fallback, which the benchmark uses for comparison).
"""

from __future__ import annotations

import os
from typing import Iterator, Sequence

import numpy as np

from .circuit import Circuit, NodeId

if os.environ.get("AOPSYNTH_FORCE_PY"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

BACKEND: str = _impl.BACKEND

_ONES = np.uint64(0xFFFFFFFFFFFFFFFF)


def _arena_views(circuit: Circuit):
    tag, left, right = circuit.raw_arrays()
    return (np.frombuffer(tag, dtype=np.int8),
            np.frombuffer(left, dtype=np.int64),
            np.frombuffer(right, dtype=np.int64))


def eval_block(circuit: Circuit, input_words: np.ndarray,
               nodes: Sequence[NodeId]) -> np.ndarray:
    """Evaluate ``nodes`` on one packed block of assignments.

    ``input_words`` has shape (num_inputs, W).  Returns shape (len(nodes), W).
    """
    if input_words.shape[0] != circuit.num_inputs:
        raise ValueError(
            f"block has {input_words.shape[0]} rows, circuit has "
            f"{circuit.num_inputs} inputs")
    tag, left, right = _arena_views(circuit)
    width = input_words.shape[1]
    values = np.empty((circuit.num_nodes, width), dtype=np.uint64)
    values[np.asarray(circuit.input_nodes(), dtype=np.int64)] = input_words
    _impl.eval_block(tag, left, right, values)
    return values[np.asarray(nodes, dtype=np.int64)]


def recompute_depths_fast(circuit: Circuit) -> np.ndarray:
    tag, left, right = _arena_views(circuit)
    out = np.empty(circuit.num_nodes, dtype=np.int64)
    _impl.recompute_depths(tag, left, right, out)
    return out


# ----------------------------------------------------------------------
# assignment block generators

def exhaustive_blocks(n_inputs: int, max_words: int = 4096
                      ) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (base_assignment_index, block) covering all 2**n assignments.

    Within a block, assignment ``base + k`` sits in word ``k // 64`` at bit
    ``k % 64``; input i carries bit i of the assignment index.
    """
    total = 1 << n_inputs
    n_words = (total + 63) // 64
    # low 6 index bits repeat within every word
    lane = np.arange(64, dtype=np.uint64)
    low_patterns = [
        np.bitwise_or.reduce(np.where((lane >> np.uint64(i)) & np.uint64(1),
                                      np.uint64(1) << lane, np.uint64(0)))
        for i in range(min(6, n_inputs))
    ]
    for start in range(0, n_words, max_words):
        width = min(max_words, n_words - start)
        block = np.empty((n_inputs, width), dtype=np.uint64)
        word_idx = np.arange(start, start + width, dtype=np.uint64)
        for i in range(n_inputs):
            if i < 6:
                block[i] = low_patterns[i]
            else:
                bit = (word_idx >> np.uint64(i - 6)) & np.uint64(1)
                block[i] = np.where(bit, _ONES, np.uint64(0))
        if start + width == n_words and total % 64:
            # surplus lanes in the final word become all-zero assignments
            block[:, -1] &= np.uint64((1 << (total % 64)) - 1)
        yield start * 64, block


def random_block(n_inputs: int, trials: int, seed: int,
                 structured: bool = True) -> np.ndarray:
    """Packed random assignments plus structured patterns.

    Structured patterns (prepended): all-zeros, all-ones, every single-hot
    vector.  Total assignment count is padded up to a multiple of 64 with
    all-zero assignments.
    """
    rng = np.random.default_rng(seed)
    extra = (2 + n_inputs) if structured else 0
    total = trials + extra
    n_words = (total + 63) // 64
    bits = np.zeros((n_inputs, n_words * 64), dtype=bool)
    if structured:
        bits[:, 1] = True
        for i in range(n_inputs):
            bits[i, 2 + i] = True
    bits[:, extra:total] = rng.integers(
        0, 2, size=(n_inputs, trials), dtype=np.uint8).astype(bool)
    return np.packbits(bits, axis=1, bitorder="little").view(np.uint64).reshape(
        n_inputs, n_words)


def unpack_assignment(block: np.ndarray, lane: int) -> list[int]:
    """Extract one assignment (list of bits per input) from a packed block."""
    word, bit = divmod(lane, 64)
    return [int((int(row[word]) >> bit) & 1) for row in block]
