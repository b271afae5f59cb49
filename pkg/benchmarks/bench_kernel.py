"""Compare the compiled arithmetic kernel against the pure-Python fallback.

Runs each workload twice in subprocesses, once per backend (selection is
import-time via SO5CG_BACKEND), and prints a timing table with speedups.

Usage:  python3 benchmarks/bench_kernel.py [--repeat N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def _workloads() -> dict:
    from fractions import Fraction
    from random import Random

    from so5cg import ZERO, IrrepLabel, sqrt_rational, verify
    from so5cg.fullcg import coupling_matrix

    def kernel_ring_ops() -> None:
        rng = Random(20260815)
        a, b = ZERO, ZERO
        for _ in range(64):
            a = a + sqrt_rational(Fraction(rng.randrange(1, 400),
                                           rng.randrange(1, 400)))
            b = b + sqrt_rational(Fraction(rng.randrange(1, 400),
                                           rng.randrange(1, 400)))
        for _ in range(8):
            float(a * b + a + b)

    def reduced_sweep() -> None:
        assert verify.reduced_unitarity(4) is None

    def full_matrix() -> None:
        coupling_matrix(IrrepLabel.of(1, 1))

    # cold workloads re-evaluate the tables every run instead of timing
    # memo lookups; the ring-ops microbenchmark has no engine cache at all
    return {
        "kernel_ring_ops": (kernel_ring_ops, False),
        "reduced_unitarity<=4 cold": (reduced_sweep, True),
        "coupling_matrix(1,1) cold": (full_matrix, True),
    }


def _clear_engine_caches() -> None:
    from importlib import import_module

    # the package re-exports same-named callables, so resolve the actual
    # submodules rather than attributes of the package namespace
    for name in ("so5cg.labels", "so5cg.reduced", "so5cg.su2"):
        for obj in vars(import_module(name)).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()


def _worker(repeat: int) -> None:
    from so5cg._kernel import BACKEND

    results = {}
    for name, (fn, cold) in _workloads().items():
        if not cold:
            fn()  # warm once so both backends amortize identically
        times = []
        for _ in range(repeat):
            if cold:
                _clear_engine_caches()
            times.append(_timed(fn))
        results[name] = min(times)
    json.dump({"backend": BACKEND, "results": results}, sys.stdout)


def _timed(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def _spawn(backend: str, repeat: int) -> dict:
    env = dict(os.environ)
    env["SO5CG_BACKEND"] = backend
    proc = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--worker",
         "--repeat", str(repeat)],
        env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="best-of-N timing per workload (default 3)")
    parser.add_argument("--worker", action="store_true",
                        help=argparse.SUPPRESS)
    args = parser.parse_args()

    if args.worker:
        _worker(args.repeat)
        return

    fast = _spawn("", args.repeat)
    pure = _spawn("pure", args.repeat)
    if fast["backend"] == pure["backend"]:
        print("warning: compiled kernel unavailable, comparing pure to pure",
              file=sys.stderr)

    width = max(len(n) for n in fast["results"])
    print(f"{'workload':<{width}}  {fast['backend']:>10}  {pure['backend']:>10}  speedup")
    for name, t_fast in fast["results"].items():
        t_pure = pure["results"][name]
        print(f"{name:<{width}}  {t_fast:>9.4f}s  {t_pure:>9.4f}s  "
              f"{t_pure / t_fast:>6.2f}x")


if __name__ == "__main__":
    main()
