"""Print the r-colored table p^<r,j>_{n,k} (default n = 3, r = 3) and check both derivations agree."""

import argparse

from lace.operators import colored_p_by_definition, colored_p_by_recurrence, colored_p_table, colored_theta
from lace.poly import format_poly


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--r", type=int, default=3)
    args = ap.parse_args()
    n, r = args.n, args.r
    T = colored_p_table(n, r)  # raises if the two derivations disagree
    assert colored_p_by_definition(n, r) == colored_p_by_recurrence(n, r)
    width = max(len(format_poly(T[(n, j, k)])) for j in range(r) for k in range(n + 1))
    print(f"n = {n}, r = {r}")
    print("      " + "".join(f"k={k}".ljust(width + 2) for k in range(n + 1)))
    for j in range(r):
        print(f"j={j}:  " + "".join(format_poly(T[(n, j, k)]).ljust(width + 2) for k in range(n + 1)))
    if n:
        print(f"theta(sigma_{n}) = {format_poly(colored_theta(n, r))}")


if __name__ == "__main__":
    main()
