#!/usr/bin/env python3
"""Benchmark the compiled segmentation kernels against the pure-Python twin.

Builds one long synthetic stroke (a jittery spiral of axis-aligned and
diagonal runs) and times categorize / smooth / change-point detection on
both implementations.

Usage: python3 benchmarks/bench_kernels.py [--points N] [--repeat R]
"""

import argparse
import random
import time

import sketchrec._kernels as pure

try:
    import sketchrec._speedups as compiled
except ImportError:
    compiled = None


def synthetic_stroke(n_points: int, seed: int = 7):
    rng = random.Random(seed)
    xs, ys = [0], [0]
    deltas = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)]
    d = 0
    while len(xs) < n_points:
        run = rng.randint(20, 200)
        dx, dy = deltas[d % 8]
        for _ in range(run):
            xs.append(xs[-1] + dx)
            ys.append(ys[-1] + dy)
        d += rng.choice((1, 7))
    return xs[:n_points], ys[:n_points]


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        started = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - started)
    return best, result


def run(impl, xs, ys, block_size, repeat):
    t_cat, cats = best_of(lambda: impl.categorize_pairs(xs, ys), repeat)
    t_smooth, smoothed = best_of(lambda: impl.smooth_blocks(cats, block_size), repeat)
    t_split, splits = best_of(lambda: impl.change_points(smoothed), repeat)
    return {"categorize": t_cat, "smooth": t_smooth, "change_points": t_split}, (cats, smoothed, splits)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--points", type=int, default=1_000_000)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--block-size", type=int, default=5)
    args = parser.parse_args()

    xs, ys = synthetic_stroke(args.points)
    print(f"stroke: {len(xs):,} points, block size {args.block_size}, best of {args.repeat}")

    pure_times, pure_out = run(pure, xs, ys, args.block_size, args.repeat)
    print(f"\n{'kernel':<15}{'pure (ms)':>12}", end="")
    if compiled is None:
        print("\n(compiled extension not built; showing pure-Python only)")
        for name, t in pure_times.items():
            print(f"{name:<15}{t * 1000:>12.1f}")
        return

    compiled_times, compiled_out = run(compiled, xs, ys, args.block_size, args.repeat)
    assert pure_out == compiled_out, "implementations disagree"

    print(f"{'compiled (ms)':>15}{'speedup':>10}")
    for name in pure_times:
        p, c = pure_times[name], compiled_times[name]
        print(f"{name:<15}{p * 1000:>12.1f}{c * 1000:>15.1f}{p / c:>9.1f}x")
    print(f"\nsplits found: {len(pure_out[2]):,} (identical outputs verified)")


if __name__ == "__main__":
    main()
