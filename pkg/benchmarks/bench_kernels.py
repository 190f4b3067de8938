"""Compare the compiled kernels with the pure-Python ones.

    python benchmarks/bench_kernels.py [--repeat 5]

The decomposition workload runs in a subprocess per backend so the
UPD_PURE_PYTHON switch takes effect at import.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from upd import _pykernels as py

try:
    from upd import _ckernels as cy
except ImportError:
    cy = None

WORKLOAD = """
import random, time
from upd.suites import random_case
from upd.decomposition import primary_decomposition
rng = random.Random(1)
cases = [random_case(rng)[0] for _ in range(300)]
t0 = time.perf_counter()
for I in cases:
    primary_decomposition(I)
print(time.perf_counter() - t0)
"""


def gens(rng, count, d, top):
    return [tuple(rng.randint(0, top) for _ in range(d)) for _ in range(count)]


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if cy is None:
        sys.exit("compiled kernels are not built; run pip install -e . --no-build-isolation")
    rng = random.Random(0)
    A, B = gens(rng, 60, 4, 9), gens(rng, 60, 4, 9)
    big = gens(rng, 2000, 4, 12)
    cases = {
        "minimalize(2000)": lambda m: m.minimalize(big),
        "pairwise_mul(60x60)": lambda m: m.pairwise_mul(A, B),
        "pairwise_lcm(60x60)": lambda m: m.pairwise_lcm(A, B),
        "colon_monomial(2000)": lambda m: m.colon_monomial(big, (3, 3, 3, 3)),
    }
    print(f"{'kernel':24} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, fn in cases.items():
        tp = min(timeit.repeat(lambda: fn(py), number=1, repeat=args.repeat)) * 1000
        tc = min(timeit.repeat(lambda: fn(cy), number=1, repeat=args.repeat)) * 1000
        print(f"{name:24} {tp:10.2f} {tc:10.2f} {tp / tc:8.1f}x")

    times = {}
    for label, pure in (("python", "1"), ("cython", "0")):
        env = dict(os.environ, UPD_PURE_PYTHON=pure)
        out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True, check=True)
        times[label] = float(out.stdout) * 1000
    print(f"{'decompose 300 ideals':24} {times['python']:10.2f} {times['cython']:10.2f} "
          f"{times['python'] / times['cython']:8.1f}x")


if __name__ == "__main__":
    main()
