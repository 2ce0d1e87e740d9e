"""Compare the compiled and numpy kernels on weight enumeration and the
self-dual scan.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

import numpy as np

from dccodes import kernels
from dccodes.census import crt_enumerate
from dccodes.codes import make_code, weight_counts
from dccodes.finite_field import field_from_order

WEIGHT_CASES = [(2, 13), (2, 17), (2, 21), (4, 7), (4, 9), (5, 6), (13, 4)]
SCAN_CASES = [(2, 15), (2, 19), (5, 6), (5, 8), (13, 4)]


def best_of(fn, repeat):
    times, out = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    names = sorted(kernels.backends())
    print(f"backends: {', '.join(names)} (default {kernels.BACKEND})")
    print(f"{'kernel':<14}{'q':>4}{'n':>4}" + "".join(f"{b + ' s':>12}" for b in names) + f"{'speedup':>10}")

    def row(label, q, n, fns):
        res = {b: best_of(fns[b], args.repeat) for b in names}
        outs = [r[1] for r in res.values()]
        assert all(np.array_equal(outs[0], o) for o in outs), "backends disagree"
        cols = "".join(f"{res[b][0]:>12.4f}" for b in names)
        speed = f"{res['python'][0] / res['cython'][0]:>9.1f}x" if "cython" in res else ""
        print(f"{label:<14}{q:>4}{n:>4}{cols}{speed}")

    for q, n in WEIGHT_CASES:
        F = field_from_order(q)
        code = make_code(F, n, crt_enumerate(n, F)[-1])
        row("weights", q, n, {b: (lambda b=b: weight_counts(code, backend=b)) for b in names})
    for q, n in SCAN_CASES:
        F = field_from_order(q)
        row("self-dual", q, n, {b: (lambda b=b: kernels.self_dual_scan(n, F, b)) for b in names})


if __name__ == "__main__":
    main()
