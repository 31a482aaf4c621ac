"""Time the construction kernels on both backends.

    python benchmarks/bench_kernels.py --sizes 10000 100000 --repeat 3
"""

import argparse
import random
import sys
import timeit

from lyndex import kernels
from lyndex.lyndon import is_lyndon


def make_text(n, sigma, seed):
    rng = random.Random(seed)
    # a repetitive text: random blocks copied with sparse edits
    block = [rng.randint(1, sigma) for _ in range(max(1, n // 50))]
    t = []
    while len(t) < n:
        piece = list(block)
        for _ in range(2):
            piece[rng.randrange(len(piece))] = rng.randint(1, sigma)
        t.extend(piece)
    t = t[:n]
    return t if is_lyndon(t) else [0] + t


def bench(backend, t, repeat):
    res = {}
    res["tree"] = min(timeit.repeat(lambda: backend.lyndon_tree(t), number=1, repeat=repeat))
    res["slp"] = min(timeit.repeat(lambda: backend.lyndon_slp(t), number=1, repeat=repeat))
    left, right, char, length, _ = backend.lyndon_slp(t)
    res["fingerprints"] = min(timeit.repeat(
        lambda: backend.fingerprints(left, right, char, length, 1_000_003), number=1, repeat=repeat))
    return res, len(left) - 1


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[10_000, 100_000])
    ap.add_argument("--sigma", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    if kernels.cython_backend is None:
        print("compiled extension not available; only the Python backend is timed",
              file=sys.stderr)
    print("n\tg\tkernel\tpython_s\tcython_s\tspeedup")
    for n in args.sizes:
        t = make_text(n, args.sigma, args.seed)
        py, g = bench(kernels.python_backend, t, args.repeat)
        cy = bench(kernels.cython_backend, t, args.repeat)[0] if kernels.cython_backend else None
        for name in py:
            c = cy[name] if cy else float("nan")
            print(f"{n}\t{g}\t{name}\t{py[name]:.4f}\t{c:.4f}\t{py[name] / c:.1f}x")


if __name__ == "__main__":
    main()
