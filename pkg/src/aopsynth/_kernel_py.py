"""Pure-Python twin of the compiled kernel (numpy row operations).

Same contracts as ``_kernel.pyx``; selected automatically when the compiled
extension is unavailable.  Roughly an order of magnitude slower on wide
blocks, which is fine for correctness work.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def eval_block(tag, left, right, values) -> None:
    tag = np.asarray(tag)
    left = np.asarray(left)
    right = np.asarray(right)
    for i in np.nonzero(tag)[0]:
        if tag[i] == 1:
            np.bitwise_and(values[left[i]], values[right[i]], out=values[i])
        else:
            np.bitwise_or(values[left[i]], values[right[i]], out=values[i])


def recompute_depths(tag, left, right, out) -> None:
    for i in range(len(tag)):
        if tag[i] == 0:
            out[i] = 0
        else:
            dl = out[left[i]]
            dr = out[right[i]]
            out[i] = (dl if dl >= dr else dr) + 1
