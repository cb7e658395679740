#!/usr/bin/env python3
"""Compare the shared-prefix elimination engine against per-stack determinants.

The discriminant sums one determinant per rearrangement of the expanded
multiplicity tuple; the engine eliminates the shared block once and adds
one row per tree edge instead of refactoring every stack from scratch.

    python scripts/bench_engine.py --n 10 --mu 4,3,2,1
"""

import argparse
import time

from multdisc import dmu, parse_partition, poly_from_roots, random_instance
from multdisc.oracle import RootSpec


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=9)
    ap.add_argument("--mu", default=None, help="partition; defaults to a seeded random one")
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--skip-slow", action="store_true")
    args = ap.parse_args()

    if args.mu:
        mu = parse_partition(args.mu)
        if sum(mu) != args.n:
            raise SystemExit(f"{list(mu)} does not partition {args.n}")
        spec = random_instance(args.seed, args.n, len(mu))
        spec = RootSpec(roots=spec.roots[: len(mu)], mults=mu, lead=1)
    else:
        spec = random_instance(args.seed, args.n, max(2, args.n - 2))
        mu = spec.partition()
    F = poly_from_roots(spec)

    t0 = time.perf_counter()
    fast = dmu(F, mu, workers=args.workers)
    t1 = time.perf_counter()
    print(f"stacks: {fast.term_count}, dimension: {fast.matrix_dim}")
    print(f"engine: {t1 - t0:.3f}s")
    if not args.skip_slow:
        t2 = time.perf_counter()
        slow = dmu(F, mu, engine="dp")
        t3 = time.perf_counter()
        print(f"per-stack determinants: {t3 - t2:.3f}s")
        print(f"agree: {fast.value == slow.value}")


if __name__ == "__main__":
    main()
