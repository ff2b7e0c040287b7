#!/usr/bin/env python3
"""Time the solver on random instances of growing size.

Prints per-configuration statistics: instance shape, feasibility mix,
and solve time percentiles. Useful for eyeballing how the auxiliary
graph and matching stage scale well past the acceptance sizes.
"""

import argparse
import statistics
import time

from ecpostman import gen_random_instance, solve


def bench(n: int, k: int, m: int, cases: int, seed0: int, verify: bool) -> None:
    times = []
    optimal = 0
    for i in range(cases):
        g = gen_random_instance(n, k, m, 5, seed=seed0 + i)
        t0 = time.perf_counter()
        sol = solve(g, verify=verify)
        times.append(time.perf_counter() - t0)
        optimal += sol.optimal
    times.sort()
    mean = statistics.fmean(times)
    p90 = times[int(0.9 * (len(times) - 1))]
    print(
        f"n={n:3d} k={k} m={m:3d}  {optimal:4d}/{cases} optimal  "
        f"mean {mean * 1000:7.1f} ms  p90 {p90 * 1000:7.1f} ms  max {times[-1] * 1000:7.1f} ms"
    )


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cases", type=int, default=25, help="instances per configuration")
    ap.add_argument("--seed", type=int, default=1, help="base seed")
    ap.add_argument("--no-verify", action="store_true", help="skip solver self-verification")
    args = ap.parse_args()

    configs = [
        (4, 3, 6),
        (5, 3, 8),
        (6, 3, 12),
        (8, 3, 16),
        (10, 5, 24),
        (12, 5, 32),
    ]
    for n, k, m in configs:
        bench(n, k, m, args.cases, args.seed, verify=not args.no_verify)


if __name__ == "__main__":
    main()
