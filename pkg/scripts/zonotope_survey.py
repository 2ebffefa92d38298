"""h*, h*_r and certificates for random lattice zonotopes."""

import argparse
import random
from dataclasses import dataclass

from lace.poly import format_poly
from lace.zonotope import Zonotope, certify_zonotope, hstar, hstar_r, interior_point_exists


@dataclass
class Survey:
    count: int = 30
    seed: int = 0
    max_generators: int = 5
    max_entry: int = 3
    max_ambient: int = 4
    rs: tuple = (1, 2, 3)


def sample(rng, cfg):
    N = rng.randint(1, cfg.max_ambient)
    gens = tuple(tuple(rng.randint(-cfg.max_entry, cfg.max_entry) for _ in range(N))
                 for _ in range(rng.randint(1, cfg.max_generators)))
    return Zonotope(gens)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    cfg = Survey(count=a.count, seed=a.seed)
    rng = random.Random(cfg.seed)
    bad = 0
    for i in range(cfg.count):
        Z = sample(rng, cfg)
        verdicts = []
        for r in cfg.rs:
            cert = certify_zonotope(Z, r)
            verdicts.append(cert.verdict)
            bad += not cert.positive
        print(f"#{i:02d} dim={Z.dim} h*={format_poly(hstar(Z)):28s} h*_2={format_poly(hstar_r(Z, 2)):28s} "
              f"interior={'y' if interior_point_exists(Z) else 'n'} {verdicts}")
    print(f"{bad} negative certificates")
    raise SystemExit(0 if not bad else 1)


if __name__ == "__main__":
    main()
