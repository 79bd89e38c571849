#!/usr/bin/env python3
"""Compare the compiled and plain-Python orientation kernels.

Classifies every canonical skeleton for the given vertex count through
both backends and reports wall time plus speedup.  The same comparison
can be forced package-wide with MECENSUS_NUMBA=0.

    python benchmarks/bench_kernels.py --n 6 --repeat 3
"""

import argparse
import time

from mecensus import _kernels
from mecensus.census import iter_skeletons
from mecensus.markov import classify_skeleton


def run_backend(kernel, skeletons):
    t0 = time.perf_counter()
    classes = 0
    orientations = 0
    for rec in skeletons:
        table = classify_skeleton(rec.graph, kernel=kernel)
        classes += len(table.classes)
        orientations += table.total_orientations
    return time.perf_counter() - t0, classes, orientations


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=6)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    skeletons = list(iter_skeletons(args.n))
    print(f"n={args.n}: {len(skeletons)} skeletons")

    backends = [("python", _kernels.enumerate_codes_python)]
    if _kernels.enumerate_codes_compiled is not None:
        # trigger compilation outside the timed region
        run_backend(_kernels.enumerate_codes_compiled, skeletons[:1])
        backends.append(("numba", _kernels.enumerate_codes_compiled))
    else:
        print("numba not importable; timing the python path only")

    results = {}
    for name, kernel in backends:
        best = None
        for _ in range(args.repeat):
            dt, classes, orientations = run_backend(kernel, skeletons)
            best = dt if best is None else min(best, dt)
        results[name] = (best, classes, orientations)
        print(f"{name:>7}: {best:8.3f}s  ({classes} unlabeled classes, "
              f"{orientations} orientations)")

    checks = {(c, o) for _, c, o in results.values()}
    if len(checks) != 1:
        raise SystemExit("backends disagree on the counts")
    if len(results) == 2:
        print(f"speedup: {results['python'][0] / results['numba'][0]:.1f}x")


if __name__ == "__main__":
    main()
