"""Compare the numba kernels with the numpy fallback.

    python benchmarks/bench_kernels.py [--reps N]

Times residual and Jacobian evaluation for a few graph sizes on both code
paths, then a short numeric search under each setting (the search reads
EVOALG_DISABLE_JIT at import, so that part runs in subprocesses).
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from evoalg import graph as G
from evoalg._jit import JIT_ENABLED
from evoalg.homsearch import structure_arrays
from evoalg.kernels import jacobian, pair_indices, residuals

SEARCH_SNIPPET = """
import time
from evoalg import graph as G
from evoalg.homsearch import numeric_hom_search
numeric_hom_search(G.cycle(5), restarts=1)
t0 = time.perf_counter()
numeric_hom_search(G.double_star_tree(2, 2), restarts=20, seed=0)
print(time.perf_counter() - t0)
"""


def kernel_table(reps: int) -> None:
    print(f"{'graph':<10}{'n':>4}  {'kernel':<10}{'numba us':>12}{'numpy us':>12}{'ratio':>8}")
    for g in (G.cycle(5), G.cycle(10), G.double_star_tree(2, 2)):
        A, B = structure_arrays(g, "rw_to_a")
        ii, jj = pair_indices(g.n)
        T = np.random.default_rng(0).uniform(-2, 2, size=(g.n, g.n))
        for name, fn in (("residual", residuals), ("jacobian", jacobian)):
            fn(T, A, B, ii, jj, use_jit=True)
            t_jit = min(timeit.repeat(lambda: fn(T, A, B, ii, jj, use_jit=True), number=reps, repeat=3)) / reps
            t_np = min(timeit.repeat(lambda: fn(T, A, B, ii, jj, use_jit=False), number=reps, repeat=3)) / reps
            print(f"{g.label():<10}{g.n:>4}  {name:<10}{t_jit * 1e6:>12.1f}{t_np * 1e6:>12.1f}{t_np / t_jit:>8.2f}")


def search_timing() -> None:
    for flag in ("0", "1"):
        env = dict(os.environ, EVOALG_DISABLE_JIT=flag)
        out = subprocess.run([sys.executable, "-c", SEARCH_SNIPPET], env=env, capture_output=True, text=True, check=True)
        label = "numpy" if flag == "1" else "numba"
        print(f"search, 20 restarts on the double star T_2,2 ({label}): {float(out.stdout):.2f} s")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--reps", type=int, default=2000)
    args = ap.parse_args()
    if not JIT_ENABLED:
        print("numba unavailable or disabled; both columns use numpy")
    kernel_table(args.reps)
    search_timing()


if __name__ == "__main__":
    main()
