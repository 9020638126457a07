#!/usr/bin/env python3
"""Benchmark the compiled evaluation kernel against the pure-Python fallback.

Builds a few representative circuits, times bulk evaluation through both
backends on identical packed blocks, and prints the speedup.  Run after an
editable install:

    python benchmarks/bench_eval.py
"""

import time

import numpy as np

from aopsynth import _kernel_py
from aopsynth import simulate
from aopsynth.adders import build_adder
from aopsynth.aop import build_aop

try:
    from aopsynth import _kernel
except ImportError:
    _kernel = None


def _time_backend(impl, circuit, block, repeats=3):
    tag, left, right = circuit.raw_arrays()
    tag = np.frombuffer(tag, dtype=np.int8)
    left = np.frombuffer(left, dtype=np.int64)
    right = np.frombuffer(right, dtype=np.int64)
    values = np.empty((circuit.num_nodes, block.shape[1]), dtype=np.uint64)
    inputs = np.asarray(circuit.input_nodes())
    best = float("inf")
    for _ in range(repeats):
        values[inputs] = block
        t0 = time.perf_counter()
        impl.eval_block(tag, left, right, values)
        best = min(best, time.perf_counter() - t0)
    return best, values[circuit.num_nodes - 1].copy()


def main():
    cases = []
    c, _ = build_aop(4096)
    cases.append(("aop m=4096", c, 1 << 14))
    c, _ = build_adder("a2", 4096)
    cases.append(("a2 n=4096", c, 10_000))
    c, _ = build_adder("a1", 2048)
    cases.append(("a1 n=2048", c, 1 << 15))

    print(f"active backend: {simulate.BACKEND}")
    print(f"{'circuit':<14} {'gates':>8} {'assignments':>12} "
          f"{'python':>10} {'cython':>10} {'speedup':>8}")
    for name, circuit, assignments in cases:
        block = simulate.random_block(circuit.num_inputs,
                                      assignments, seed=1, structured=False)
        t_py, v_py = _time_backend(_kernel_py, circuit, block)
        if _kernel is None:
            print(f"{name:<14} {circuit.size():>8} {assignments:>12} "
                  f"{t_py * 1e3:>8.1f}ms {'n/a':>10} {'n/a':>8}")
            continue
        t_cy, v_cy = _time_backend(_kernel, circuit, block)
        assert np.array_equal(v_py, v_cy), "backends disagree"
        print(f"{name:<14} {circuit.size():>8} {assignments:>12} "
              f"{t_py * 1e3:>8.1f}ms {t_cy * 1e3:>8.1f}ms "
              f"{t_py / t_cy:>7.1f}x")


if __name__ == "__main__":
    main()
