"""Compare the compiled and pure Python kernels on representative workloads.

    python3 benchmarks/bench_kernels.py [--repeat N]

The workloads mirror the package's hot paths: batched Aberth root finding
for fiber sweeps (10000 quartics), and modular rank / determinant of the
Macaulay-sized integer matrices used in smoothness and section probes.
"""

import argparse
import time

import numpy as np

from conehyp import _pykernels

try:
    from conehyp import _ckernels
except ImportError:
    _ckernels = None

P61 = 2**61 - 1


def workloads(rng):
    quartics = rng.normal(size=(10_000, 5)) + 1j * rng.normal(size=(10_000, 5))
    octics = rng.normal(size=(2_000, 9)) + 0j
    square = rng.integers(-(2**40), 2**40, size=(120, 120), dtype=np.int64)
    low_rank = (rng.integers(-9, 10, (200, 60)) @ rng.integers(-9, 10, (60, 190))).astype(np.int64)
    return [
        ("aberth 10000 quartics", "aberth_batch", (quartics,)),
        ("aberth 2000 real octics", "aberth_batch", (octics,)),
        ("det mod p 120x120", "det_mod_p", (square, P61)),
        ("rank mod p 200x190 (rank 60)", "rank_mod_p", (low_rank, P61)),
    ]


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - start)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = np.random.default_rng(args.seed)
    print(f"{'workload':32} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for label, name, fargs in workloads(rng):
        py = best_of(getattr(_pykernels, name), fargs, args.repeat)
        if _ckernels is None:
            print(f"{label:32} {py:9.3f}s {'n/a':>10} {'':>8}")
            continue
        c = best_of(getattr(_ckernels, name), fargs, args.repeat)
        print(f"{label:32} {py:9.3f}s {c:9.3f}s {py / c:7.1f}x")


if __name__ == "__main__":
    main()
