"""Compiled versus numpy elimination kernel, plus one end-to-end workload.

Run: python3 benchmarks/bench_kernels.py [--repeat N]
"""
from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from cohlength import _rref_py

try:
    from cohlength import _rref_c
except ImportError:  # extension not built
    _rref_c = None

SIZES = [(8, 8), (32, 32), (64, 96), (128, 128), (256, 256)]
P = 5


def _time(fn, mats, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        work = [m.copy() for m in mats]
        t0 = time.perf_counter()
        for a in work:
            fn(a, P)
        best = min(best, time.perf_counter() - t0)
    return best / len(mats)


def kernel_table(repeat: int) -> None:
    rng = np.random.default_rng(0)
    print(f"{'shape':>10}  {'numpy (ms)':>11}  {'cython (ms)':>11}  speedup")
    for rows, cols in SIZES:
        count = max(2, 2000 // (rows * cols // 64 + 1))
        mats = [np.ascontiguousarray(rng.integers(0, P, size=(rows, cols)), dtype=np.int64) for _ in range(count)]
        # agreement before timing
        if _rref_c is not None:
            for a in mats[:3]:
                x, y = a.copy(), a.copy()
                assert _rref_py.rref_inplace(x, P) == list(_rref_c.rref_inplace(y, P)) and (x == y).all()
        t_py = _time(_rref_py.rref_inplace, mats, repeat)
        if _rref_c is None:
            print(f"{rows}x{cols:>6}  {t_py * 1e3:11.3f}  {'n/a':>11}  n/a")
            continue
        t_c = _time(_rref_c.rref_inplace, mats, repeat)
        print(f"{rows:>4}x{cols:<5}  {t_py * 1e3:11.3f}  {t_c * 1e3:11.3f}  {t_py / t_c:6.1f}x")


WORKLOAD = """
import time
from cohlength.kernels import BACKEND
from cohlength.suites import run_suite
t = time.perf_counter()
rep = run_suite("ar-exact")
assert rep.passed
print(BACKEND, round(time.perf_counter() - t, 3))
"""


def workload() -> None:
    print("\nend-to-end: ar-exact suite")
    for force in ("0", "1"):
        env = dict(os.environ, COHLENGTH_PURE_PYTHON=force)
        out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True, check=True)
        backend, secs = out.stdout.split()
        print(f"  {backend:>7}: {float(secs):.2f} s")


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    kernel_table(args.repeat)
    workload()


if __name__ == "__main__":
    main()
