"""Compare the compiled and numpy kernel backends.

    python benchmarks/bench_kernels.py [--n 15] [--repeat 3]

Each kernel runs on identical inputs in both backends; the outputs are
checked for bit-identity before timings are reported.
"""

import argparse
import time

import numpy as np

from pyjama import _backend
from pyjama.witness import _axis, rotation_table


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(a, b)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=15)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    names = _backend.available()
    if "cython" not in names:
        print("compiled extension not built; only the numpy backend is available")
    backends = {name: _backend.load(name) for name in names}
    tab = rotation_table(args.n)
    atab, c0, _ = _axis(args.n)
    rng = np.random.default_rng(0)
    xs, ys = rng.uniform(-1e6, 1e6, (2, 200_000))

    cases = {
        "margin_batch (2e5 points)": lambda k: k.margin_batch(xs, ys, tab),
        "pattern_search (32 starts)": lambda k: tuple(
            k.pattern_search(x, y, tab, 0.25, 0.5, 400, 1e-12) for x, y in zip(xs[:32], ys[:32])),
        "axis_scan (2e6 points)": lambda k: k.axis_scan(atab, c0, 1 / 3, 0, 2_000_000, 8),
    }
    print(f"n = {args.n}, best of {args.repeat}")
    print(f"{'kernel':<30}" + "".join(f"{name:>12}" for name in backends) + f"{'speedup':>10}  identical")
    for label, fn in cases.items():
        times, outs = {}, {}
        for name, k in backends.items():
            times[name], outs[name] = best_of(lambda: fn(k), args.repeat)
        row = f"{label:<30}" + "".join(f"{times[name]:>11.4f}s" for name in backends)
        if len(backends) == 2:
            row += f"{times['python'] / times['cython']:>9.1f}x  {same(outs['cython'], outs['python'])}"
        print(row)


if __name__ == "__main__":
    main()
