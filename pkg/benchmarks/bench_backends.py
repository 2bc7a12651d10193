#!/usr/bin/env python3
"""Compare the compiled and pure-Python GF(2) kernels.

Micro section: rref / solve / nullspace on batches of random bit
matrices at several shapes.  Macro section: full decision workloads
(corpus agreement run, tetra2 max-boundance loop) in subprocesses with
the backend pinned through BOUNDANCE_GF2_BACKEND.

Usage: python3 benchmarks/bench_backends.py [--repeat N] [--skip-macro]
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time

from boundance import _gf2py

try:
    from boundance import _gf2core
except ImportError:
    _gf2core = None

SHAPES = [
    ("tiny 8x8", 8, 8, 400),
    ("desk 20x10", 20, 10, 400),
    ("medium 64x64", 64, 64, 60),
    ("wide 40x200", 40, 200, 40),
]


def make_batch(m: int, n: int, count: int, seed: int) -> list[list[int]]:
    rng = random.Random(seed)
    return [[rng.getrandbits(n) for _ in range(m)] for _ in range(count)]


def time_kernel(kern, batch: list[list[int]], n: int) -> float:
    full = (1 << n) - 1
    t0 = time.perf_counter()
    for rows in batch:
        kern.rref(rows, n)
        kern.solve_masked(rows, n, (1 << len(rows)) - 1, full)
        kern.nullspace_masked(rows, n, full)
    return time.perf_counter() - t0


def micro(repeat: int) -> None:
    print(f"{'shape':<14} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, m, n, count in SHAPES:
        batch = make_batch(m, n, count, seed=1)
        py = min(time_kernel(_gf2py, batch, n) for _ in range(repeat))
        line = f"{name:<14} {py * 1e3:>8.1f}ms"
        if _gf2core is not None:
            cy = min(time_kernel(_gf2core, batch, n) for _ in range(repeat))
            line += f" {cy * 1e3:>8.1f}ms {py / cy:>7.1f}x"
        else:
            line += "   (compiled kernel not built)"
        print(line)


MACRO_SNIPPETS = [
    (
        "corpus agreement (60 instances, k<=4)",
        "from boundance import corpus, decide\n"
        "for inst in corpus.instances(60, 7):\n"
        "    for k in range(1, 5):\n"
        "        decide.is_k_boundant(inst.complex, inst.cycles, k, 'all')\n",
    ),
    (
        "tetra2 max-boundance x200",
        "from boundance import decide, generate\n"
        "K = generate.build_family('tetra2')\n"
        "c = K.chain(1, ['e12', 'e13', 'e23'])\n"
        "for _ in range(200):\n"
        "    assert decide.max_boundance(K, [c]) == 3\n",
    ),
]


def run_macro(code: str, backend: str) -> float:
    env = dict(os.environ, BOUNDANCE_GF2_BACKEND=backend)
    t0 = time.perf_counter()
    subprocess.run([sys.executable, "-c", code], env=env, check=True)
    return time.perf_counter() - t0


def macro() -> None:
    print()
    print(f"{'workload':<40} {'python':>9} {'compiled':>9}")
    for name, code in MACRO_SNIPPETS:
        py = run_macro(code, "python")
        line = f"{name:<40} {py:>8.2f}s"
        if _gf2core is not None:
            cy = run_macro(code, "compiled")
            line += f" {cy:>8.2f}s"
        print(line)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--skip-macro", action="store_true")
    args = parser.parse_args()
    micro(args.repeat)
    if not args.skip_macro:
        macro()


if __name__ == "__main__":
    main()
