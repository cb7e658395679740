#!/usr/bin/env python3
"""Size comparison of the one-inequation condition vs the subresultant chain.

For every partition of n with 2 <= m <= n-2, prints the polynomial counts
and maximum coefficient degrees of both multiplicity conditions from their
closed forms, and optionally re-measures them symbolically for small n.

    python scripts/compare_sizes.py --n 8
    python scripts/compare_sizes.py --n 5 --measure
"""

import argparse

from multdisc import (
    dmu,
    dmu_degree,
    generic_poly,
    measured_size,
    partitions,
    yhz_condition,
    yhz_count,
    yhz_degree,
    yhz_degree_lower_bound,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=8)
    ap.add_argument("--measure", action="store_true",
                    help="recompute sizes from the symbolic objects (n <= 6)")
    args = ap.parse_args()
    n = args.n

    header = f"{'mu':>16} {'#new':>5} {'#sub':>5} {'d_new':>6} {'d_sub':>6} {'bound':>6}"
    if args.measure:
        header += f" {'meas_d_new':>10} {'meas_#sub':>9} {'meas_d_sub':>10}"
    print(header)
    F = generic_poly(n) if args.measure else None
    for m in range(2, n - 1):
        for mu in reversed(partitions(n, m)):
            row = (
                f"{str(list(mu)):>16} {1:>5} {yhz_count(mu):>5} "
                f"{dmu_degree(n, mu):>6} {yhz_degree(mu):>6} "
                f"{yhz_degree_lower_bound(n, mu[1]):>6}"
            )
            if args.measure:
                d_meas = dmu(F, mu, symbolic_cap=n).value.total_degree()
                count, maxdeg = measured_size(yhz_condition(F, mu))
                row += f" {d_meas:>10} {count:>9} {maxdeg:>10}"
            print(row)


if __name__ == "__main__":
    main()
