"""Benchmark the numba and numpy kernel backends on the package's hot scans.

Run with ``python -m mcgquot.bench``.  The first numba timing includes JIT
compilation, so each workload is warmed up once before being timed.
"""

from __future__ import annotations

import time

import numpy as np

from . import ffkernels as kernels
from .ff import get_field
from .flags import golden_braid_scan, scan_flags


def _time(label: str, fn, repeat: int = 1) -> float:
    fn()  # warm-up (JIT compile on the numba path)
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    workloads = []
    f9 = get_field(3, 2)
    f3 = get_field(3)
    rng = np.random.default_rng(7)
    batch = rng.integers(0, 9, size=(20000, 3, 3)).astype(kernels.DTYPE)

    workloads.append(("batched-matmul-20k-gf9", lambda: kernels.batched_mat_mul(batch, batch, f9.tables)))
    workloads.append(("golden-braid-scan-gf9", lambda: golden_braid_scan(f9)))
    workloads.append(("flag-scan-gl3-gf3", lambda: scan_flags(3, 3)))

    results: dict[str, dict[str, float]] = {}
    for backend in kernels.available_backends():
        kernels.set_backend(backend)
        for label, fn in workloads:
            results.setdefault(label, {})[backend] = _time(label, fn)

    print(f"{'workload':<28}" + "".join(f"{b:>12}" for b in kernels.available_backends()))
    for label, times in results.items():
        row = f"{label:<28}"
        for backend in kernels.available_backends():
            row += f"{times[backend]:>11.3f}s"
        print(row)


if __name__ == "__main__":
    main()
