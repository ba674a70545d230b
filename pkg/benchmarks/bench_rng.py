"""Benchmark the compiled uniform-fill kernel against the pure path.

Both paths implement the same generator bit for bit; this script checks
that equality on a short stream and then times bulk draws.  Run with

    python benchmarks/bench_rng.py [--draws N] [--repeat K]

Set BLOCKPIVOT_NO_NUMBA=1 to see what the package falls back to when
the compiled path is disabled.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from blockpivot.rng import HAS_NUMBA, Xoshiro256pp, _fill_uniform_py, using_numba

if HAS_NUMBA:
    from blockpivot.rng import _fill_uniform_nb


def _time_fill(fill, draws: int, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        state = np.array([2, 3, 5, 7], dtype=np.uint64)
        out = np.empty(draws, dtype=np.float64)
        start = time.perf_counter()
        fill(state, out, -1.0, 1.0)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--draws", type=int, default=2_000_000)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    print(f"numba available: {HAS_NUMBA}; package dispatch uses numba: {using_numba()}")

    check = 4096
    state_a = np.array([11, 13, 17, 19], dtype=np.uint64)
    out_a = np.empty(check, dtype=np.float64)
    _fill_uniform_py(state_a, out_a, -3.0, 5.0)
    if HAS_NUMBA:
        state_b = np.array([11, 13, 17, 19], dtype=np.uint64)
        out_b = np.empty(check, dtype=np.float64)
        _fill_uniform_nb(state_b, out_b, -3.0, 5.0)
        if not (np.array_equal(out_a, out_b) and np.array_equal(state_a, state_b)):
            print("MISMATCH between compiled and pure kernels")
            return 1
        print(f"kernels agree bit for bit on {check} draws")
        _fill_uniform_nb(np.array([2, 3, 5, 7], dtype=np.uint64),
                         np.empty(16, dtype=np.float64), 0.0, 1.0)

    t_py = _time_fill(_fill_uniform_py, args.draws, args.repeat)
    print(f"pure python: {args.draws} draws in {t_py:.3f} s "
          f"({args.draws / t_py / 1e6:.2f} M/s)")
    if HAS_NUMBA:
        t_nb = _time_fill(_fill_uniform_nb, args.draws, args.repeat)
        print(f"numba:       {args.draws} draws in {t_nb:.3f} s "
              f"({args.draws / t_nb / 1e6:.2f} M/s)")
        print(f"speedup: {t_py / t_nb:.1f}x")

    rng = Xoshiro256pp(42)
    start = time.perf_counter()
    rng.uniform(args.draws, -1.0, 1.0)
    t_api = time.perf_counter() - start
    print(f"Xoshiro256pp.uniform (dispatching): {t_api:.3f} s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
