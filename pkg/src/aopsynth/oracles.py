"""Reference semantics for AND-OR paths, extended AND-OR paths and carries.

These are the independent oracles used to verify constructed circuits.  They
never touch :class:`~aopsynth.circuit.Circuit`; each one is a direct linear
transcription of the defining recurrence.  Every oracle comes in two flavors:
a scalar one over single bits and a packed one over numpy ``uint64`` lanes
(64 assignments per word) for bulk verification.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

__all__ = [
    "aop_reference", "extended_aop_reference", "carry_reference",
    "aop_words", "extended_aop_words", "carry_words",
]


def aop_reference(t: Sequence[int], dual: bool = False) -> int:
    """AND-OR path g(t) = t0 & (t1 | (t2 & ...)), or g*(t) when ``dual``."""
    m = len(t)
    if m == 0:
        raise ValueError("AND-OR path needs at least one input")
    v = t[m - 1] & 1
    for i in range(m - 2, -1, -1):
        if (i % 2 == 0) != dual:
            v = (t[i] & 1) & v
        else:
            v = (t[i] & 1) | v
    return v


def extended_aop_reference(s: Sequence[int], t: Sequence[int],
                           dual: bool = False) -> int:
    """f(s, t) = AND(s) & g(t)  (or the dual f*).  m = 0 degenerates to AND(s)."""
    if len(s) + len(t) == 0:
        raise ValueError("extended AND-OR path needs at least one input")
    if len(t) == 0:
        v = 0 if dual else 1
    else:
        v = aop_reference(t, dual)
    for x in s:
        if dual:
            v |= x & 1
        else:
            v &= x & 1
    return v


def carry_reference(p: Sequence[int], g: Sequence[int]) -> list[int]:
    """All carry bits c_1..c_n from c_{i+1} = g_i | (p_i & c_i), c_0 = 0.

    Never reads p[0].
    """
    if len(p) != len(g):
        raise ValueError(f"propagate/generate length mismatch: {len(p)} != {len(g)}")
    if len(g) == 0:
        raise ValueError("adder needs at least one input pair")
    c = g[0] & 1
    out = [c]
    for i in range(1, len(g)):
        c = (g[i] & 1) | ((p[i] & 1) & c)
        out.append(c)
    return out


# ----------------------------------------------------------------------
# packed variants: rows are inputs, columns are 64-assignment words


def aop_words(t: np.ndarray, dual: bool = False) -> np.ndarray:
    """Packed g/g* over t of shape (m, W); returns shape (1, W)."""
    m = t.shape[0]
    v = t[m - 1].copy()
    for i in range(m - 2, -1, -1):
        if (i % 2 == 0) != dual:
            v &= t[i]
        else:
            v |= t[i]
    return v.reshape(1, -1)


def extended_aop_words(s: np.ndarray, t: np.ndarray,
                       dual: bool = False) -> np.ndarray:
    """Packed f/f* over s of shape (n, W) and t of shape (m, W)."""
    width = s.shape[1] if s.shape[0] else t.shape[1]
    if t.shape[0] == 0:
        fill = 0 if dual else np.uint64(0xFFFFFFFFFFFFFFFF)
        v = np.full(width, fill, dtype=np.uint64)
    else:
        v = aop_words(t, dual)[0].copy()
    for row in s:
        if dual:
            v |= row
        else:
            v &= row
    return v.reshape(1, -1)


def carry_words(p: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Packed carries over p, g of shape (n, W); returns shape (n, W)."""
    n = g.shape[0]
    out = np.empty_like(g)
    c = g[0].copy()
    out[0] = c
    for i in range(1, n):
        c = g[i] | (p[i] & c)
        out[i] = c
    return out
