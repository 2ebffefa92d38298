"""Subdivide random complexes literally and compare h-polynomials with the operators."""

import argparse

from lace.batch import OracleBatch, run_oracle_batch


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--complexes", type=int, default=60)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-dim", type=int, default=3)
    ap.add_argument("--r", type=int, nargs="+", default=[1, 2, 3])
    a = ap.parse_args()
    res = run_oracle_batch(OracleBatch(a.complexes, a.seed, a.max_dim, tuple(a.r)))
    print(f"{res.runs} complexes, {res.operator_checks + res.runs} identities, {res.seconds:.2f}s")
    for f in res.failures:
        print("FAIL", f)
    raise SystemExit(0 if res.ok else 1)


if __name__ == "__main__":
    main()
