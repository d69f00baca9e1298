#!/usr/bin/env python3
"""Time the scan kernels on both backends.

The jitted and the pure-numpy implementations are called side by side in
one process (no env juggling needed), on the twisted-involution scan and
the cycle-type pass that dominate the big sweeps.

Usage: python benchmarks/bench_kernels.py [--n 9] [--repeat 3]
"""
import argparse
import math
import time

import numpy as np

from sntwist import kernels
from sntwist.partitions import partitions_of
from sntwist.perms import Permutation


def time_call(fn, *args, repeat=3):
    best = math.inf
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=9)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    n = args.n

    total = math.factorial(n)
    x = Permutation.from_cycles([(1, 2), (3, 4, 5)], n).word
    parts = partitions_of(n)
    type_table = np.zeros((len(parts), n), dtype=np.int64)
    for i, p in enumerate(parts):
        type_table[i, : len(p)] = p
    block = kernels.perm_block(n, 0, min(total, 1 << 17))

    print(f"degree {n}: {total} elements, block of {len(block)} rows")
    print(f"active backend: {kernels.backend_name()}")
    header = f"{'kernel':<24} " + " ".join(f"{name:>12}" for name in kernels.IMPLS)
    print(header)
    print("-" * len(header))

    rows = [
        ("count_twisted_inner", lambda impl: impl["count_twisted_inner"](n, np.asarray(x), 0, total)),
        ("perm_block (128k)", lambda impl: impl["perm_block"](n, 0, min(total, 1 << 17))),
        ("cycle_type_ids", lambda impl: impl["cycle_type_ids"](block, type_table)),
        ("element_orders", lambda impl: impl["element_orders"](block)),
    ]
    for name, call in rows:
        cells = []
        reference = None
        for impl_name, impl in kernels.IMPLS.items():
            if impl_name != "numpy":
                call(impl)  # warm the jit before timing
            best, result = time_call(call, impl, repeat=args.repeat)
            scalar = result if isinstance(result, int) else None
            if reference is None:
                reference = result
            else:
                same = (
                    reference == result
                    if scalar is not None
                    else np.array_equal(reference, result)
                )
                assert same, f"backends disagree on {name}"
            cells.append(f"{best:>11.3f}s")
        print(f"{name:<24} " + " ".join(cells))


if __name__ == "__main__":
    main()
