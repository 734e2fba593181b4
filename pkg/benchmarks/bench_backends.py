#!/usr/bin/env python3
"""Benchmark the compiled box-fitting core against the NumPy fallback.

Times the raw per-horizon fit kernel and the end-to-end decomposition
on synthetic random walks, and cross-checks that the two backends agree
numerically.

Usage:
    python benchmarks/bench_backends.py [--sizes 10000,100000,1000000] [--repeats 5]
"""

import argparse
import time

import numpy as np

from lrd import decompose, validate
from lrd._boxfit_py import fit_boxes as fit_pure

try:
    from lrd._boxfit import fit_boxes as fit_ext
except ImportError:
    fit_ext = None

HORIZONS = (5, 20, 50, 250, 1000)


def time_call(fn, repeats, *args):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def bench_kernel(values, repeats):
    rows = []
    for h in HORIZONS:
        count = len(values) // h
        if count < 2:
            continue
        offset = len(values) - count * h
        t_pure = time_call(fit_pure, repeats, values, offset, h, count)
        row = {"h": h, "boxes": count, "pure": t_pure}
        if fit_ext is not None:
            row["ext"] = time_call(fit_ext, repeats, values, offset, h, count)
            sp, ip_, rp = fit_pure(values, offset, h, count)
            se, ie, re_ = fit_ext(values, offset, h, count)
            assert np.allclose(sp, se, rtol=1e-12, atol=1e-12)
            assert np.allclose(rp, re_, rtol=1e-12, atol=1e-12)
        rows.append(row)
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="10000,100000,1000000",
                        help="comma-separated series lengths")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if fit_ext is None:
        print("compiled core not available; timing the fallback only\n")

    for n in sizes:
        rng = np.random.default_rng(1)
        values = (0.01 + rng.standard_normal(n)).cumsum()
        print(f"series length {n}")
        print(f"  {'h':>6} {'boxes':>8} {'pure (ms)':>12} {'ext (ms)':>12} {'speedup':>9}")
        for row in bench_kernel(values, args.repeats):
            pure_ms = row["pure"] * 1e3
            if "ext" in row:
                ext_ms = row["ext"] * 1e3
                print(f"  {row['h']:>6} {row['boxes']:>8} {pure_ms:>12.3f} "
                      f"{ext_ms:>12.3f} {row['pure'] / row['ext']:>8.1f}x")
            else:
                print(f"  {row['h']:>6} {row['boxes']:>8} {pure_ms:>12.3f} {'-':>12} {'-':>9}")

        series = validate(values)
        horizons = [h for h in HORIZONS if n // h >= 2]
        t_dec = time_call(decompose, args.repeats, series, horizons)
        print(f"  end-to-end decompose over {horizons}: {t_dec * 1e3:.1f} ms "
              f"(active backend)\n")


if __name__ == "__main__":
    main()
