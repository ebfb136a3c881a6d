"""Compare the compiled and fallback scan kernels.

    python benchmarks/bench_kernels.py --max-len 18 --repeat 3
"""

import argparse
import random
import timeit

import numpy as np

from fbwords import _pykernels

try:
    from fbwords import _ckernels
except ImportError:
    _ckernels = None


def bench(label, fn, repeat):
    best = min(timeit.repeat(fn, number=1, repeat=repeat))
    print(f"  {label:<10} {best * 1e3:10.2f} ms")
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-len", type=int, default=18)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--words", type=int, default=20_000, help="random words for the per-word kernel")
    args = ap.parse_args()

    backends = [("fallback", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    if _ckernels is None:
        print("compiled kernels not built; timing the fallback only")

    for n in range(max(2, args.max_len - 4), args.max_len + 1):
        print(f"full scan, n={n} ({1 << n} words)")
        results = {}
        for label, mod in backends:
            results[label] = bench(label, lambda mod=mod: mod.unbordered_counts(n, 0, 1 << n), args.repeat)
        if len(results) == 2:
            assert np.array_equal(_pykernels.unbordered_counts(n, 0, 1 << n), _ckernels.unbordered_counts(n, 0, 1 << n))
            print(f"  speedup    {results['fallback'] / results['cython']:10.1f}x")

    rng = random.Random(1)
    sample = [(rng.getrandbits(n), n) for n in (rng.randint(8, 40) for _ in range(args.words))]
    print(f"per-word unbordered_mask, {args.words} random words of length 8..40")
    results = {}
    for label, mod in backends:
        results[label] = bench(label, lambda mod=mod: [mod.unbordered_mask(x, n) for x, n in sample], args.repeat)
    if len(results) == 2:
        print(f"  speedup    {results['fallback'] / results['cython']:10.1f}x")


if __name__ == "__main__":
    main()
