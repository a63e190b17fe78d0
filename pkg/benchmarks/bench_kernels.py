#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Run after an editable install:

    python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from fuskit import kernels
from fuskit.families import fib_extension, n_ising, tambara_yamagami
from fuskit.groups import cyclic, direct_product, symmetric


def bench(fn, *args, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    rings = [
        ("ty_z8 (rank 9)", tambara_yamagami(cyclic(8))),
        ("fib_ext_s3 (rank 12)", fib_extension(symmetric(3))),
        ("n_ising_4 (rank 24)", n_ising(4)),
        ("n_ising_5 (rank 48)", n_ising(5)),
        (
            "ty_z2^5 (rank 33)",
            tambara_yamagami(
                direct_product(
                    direct_product(cyclic(2), cyclic(2)),
                    direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2))),
                )
            ),
        ),
    ]
    backends = kernels.available_backends()
    print(f"available backends: {', '.join(backends)}")
    print()
    header = f"{'workload':28} " + " ".join(f"{b:>12}" for b in backends)
    print(header)
    print("-" * len(header))

    for name, ring in rings:
        N = ring.dense()
        times = []
        for bname in backends:
            impl = kernels.get_backend(bname)
            times.append(bench(impl.associativity_witness, N))
        row = f"assoc {name:22} " + " ".join(f"{t * 1e3:10.2f}ms" for t in times)
        print(row)

    rng = np.random.default_rng(0)
    for n in (16, 48):
        M = rng.integers(0, 3, size=(n, n)).astype(np.float64) + np.eye(n)
        times = []
        for bname in backends:
            impl = kernels.get_backend(bname)
            times.append(bench(impl.power_iteration, M, 1e-12, 10**6))
        row = f"power iteration n={n:<10} " + " ".join(f"{t * 1e3:10.2f}ms" for t in times)
        print(row)


if __name__ == "__main__":
    main()
