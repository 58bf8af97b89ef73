"""Compare the numba and numpy kernels over all of S_n.

    python3 benchmarks/bench_kernels.py --n 7 8 9 --repeat 3

The numba timings exclude compilation (one warm-up call per kernel).
Both paths are checked for identical output before timing.
"""

from __future__ import annotations

import argparse
import sys
import timeit

import numpy as np

from youngfib import kernels

KERNELS = {
    "inversion_counts": ("_inversion_counts_numpy", "_inversion_counts_numba"),
    "inversion_masks": ("_inversion_masks_numpy", "_inversion_masks_numba"),
    "insertion_keys": ("_insertion_keys_numpy", "_insertion_keys_numba"),
}


def bench(n: int, repeat: int) -> list[tuple[str, int, float, float | None]]:
    perms = np.ascontiguousarray(kernels.all_permutations(n))
    rows = []
    for name, (np_name, nb_name) in KERNELS.items():
        f_np = getattr(kernels, np_name)
        f_nb = getattr(kernels, nb_name)
        ref = f_np(perms)
        t_np = min(timeit.repeat(lambda: f_np(perms), number=1, repeat=repeat))
        t_nb = None
        if f_nb is not None:
            got = f_nb(perms)  # warm-up and compile
            if not np.array_equal(ref, got):
                raise SystemExit(f"{name}: numba and numpy disagree at n={n}")
            t_nb = min(timeit.repeat(lambda: f_nb(perms), number=1, repeat=repeat))
        rows.append((name, n, t_np, t_nb))
    return rows


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[6, 7, 8, 9])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if not kernels.HAVE_NUMBA:
        print("numba not installed; timing the numpy path only", file=sys.stderr)
    print(f"{'kernel':<18} {'n':>3} {'numpy [ms]':>12} {'numba [ms]':>12} {'speedup':>8}")
    for n in args.n:
        for name, k, t_np, t_nb in bench(n, args.repeat):
            nb = f"{t_nb * 1e3:12.2f}" if t_nb is not None else f"{'-':>12}"
            sp = f"{t_np / t_nb:8.1f}" if t_nb else f"{'-':>8}"
            print(f"{name:<18} {k:>3} {t_np * 1e3:12.2f} {nb} {sp}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
