"""Skeleton check: random Gamma h-vectors against barycentric, colored and edgewise triangles."""

import argparse

from lace.batch import SkeletonBatch, run_skeleton_batch


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-entry", type=int, default=5)
    ap.add_argument("--max-n", type=int, default=4)
    a = ap.parse_args()
    res = run_skeleton_batch(SkeletonBatch(a.samples, a.seed, a.max_entry, a.max_n))
    print(f"{res.runs} certifications in {res.seconds:.1f}s, {len(res.failures)} failures")
    for f in res.failures:
        print("FAIL", f)
    raise SystemExit(0 if res.ok else 1)


if __name__ == "__main__":
    main()
