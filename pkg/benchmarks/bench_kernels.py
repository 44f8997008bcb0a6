"""Compare the compiled and pure-Python kernel backends.

Usage: python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import timeit

import numpy as np

from petalstar.caratheodory import sample_batch
from petalstar.kernels import available_backends


def cases(rng):
    n = 1_000_000
    p = rng.uniform(0, 2, n)
    x, y = rng.uniform(0, 1, (2, n))
    P = sample_batch(200_000, 6, rng)
    pts = rng.uniform(0, 1, (20_000, 3)) * [2, 1, 1]
    return {
        "eval_m_points (1e6 points)": lambda k: k.eval_m_points(p, x, y),
        "coeffs_batch (2e5 rows)": lambda k: k.coeffs_batch(P),
        "eval_m scalar loop (2e4 calls)": lambda k: [k.eval_m(a, b, c) for a, b, c in pts],
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = available_backends()
    rng = np.random.default_rng(0)
    print(f"{'kernel':34s}" + "".join(f"{name:>12s}" for name in backends) + "     speedup")
    for label, fn in cases(rng).items():
        times = {name: min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat))
                 for name, mod in backends.items()}
        row = f"{label:34s}" + "".join(f"{t * 1e3:10.1f}ms" for t in times.values())
        if "compiled" in times:
            row += f"  {times['python'] / times['compiled']:8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
