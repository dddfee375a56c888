#!/usr/bin/env python3
"""Tabulate the relative degree factorization for every partition of n.

    python scripts/degree_table.py 8 --d 3
"""

import argparse

from symhooks.beta_sets import beta_set_for, core_partition
from symhooks.hook_functions import relative_degree_factorization
from symhooks.partitions import character_degree, enumerate_partitions


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("n", type=int)
    ap.add_argument("--d", type=int, default=2)
    args = ap.parse_args()
    print(f"{'lambda':20s} {'core':12s} {'n!/r!':>14s} {'|prod Q|':>12s} {'core deg':>9s} {'degree':>10s}")
    for lam in enumerate_partitions(args.n):
        X = beta_set_for(lam, len(lam))
        fac = relative_degree_factorization(lam, X, args.d)
        assert fac.degree() == character_degree(lam)
        print(f"{str(lam):20s} {str(core_partition(X, args.d)):12s} {fac.index_ratio:14d} "
              f"{fac.quotient_product:12d} {fac.core_degree:9d} {fac.degree():10d}")


if __name__ == "__main__":
    main()
