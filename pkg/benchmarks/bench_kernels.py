"""Compare the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import random
import timeit

from chiralpart import _purepy
from chiralpart.partition import partitions

try:
    from chiralpart import _speedups
except ImportError:
    _speedups = None


def random_partition(n, rng):
    parts, rem = [], n
    while rem:
        part = rng.randint(1, rem)
        parts.append(part)
        rem -= part
    return tuple(sorted(parts, reverse=True))


def workloads():
    small = list(partitions(26))
    rng = random.Random(7)
    large = [random_partition(4097, rng) for _ in range(200)]
    return [
        ("content_sum  p(26)", lambda m: [m.content_sum(lam) for lam in small]),
        ("hook_v2_sum  p(26)", lambda m: [m.hook_v2_sum(lam) for lam in small]),
        ("core_quotient p(26), p=4", lambda m: [m.core_quotient(lam, 4) for lam in small]),
        ("hook_v2_sum  200 x n=4097", lambda m: [m.hook_v2_sum(lam) for lam in large]),
        ("core_quotient 200 x n=4097, p=64", lambda m: [m.core_quotient(lam, 64) for lam in large]),
    ]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _speedups is None:
        print("compiled extension not built; only the fallback is available")
    print(f"{'workload':36} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, job in workloads():
        py = min(timeit.repeat(lambda: job(_purepy), number=1, repeat=args.repeat)) * 1e3
        if _speedups is None:
            print(f"{name:36} {py:10.2f} {'-':>10} {'-':>8}")
            continue
        cy = min(timeit.repeat(lambda: job(_speedups), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:36} {py:10.2f} {cy:10.2f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
