#!/usr/bin/env python3
"""Sweep random lattice families and tabulate CME against the Euler sum.

    python scripts/cme_euler_sweep.py --count 200 --d-max 2 --coord-max 3
"""

from __future__ import annotations

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass, field

from minkcx.generate import FamilyConfig, random_lattice_family
from minkcx.minkowski import verify_theorem1


@dataclass
class SweepConfig:
    count: int = 100
    seed: int = 0
    family: FamilyConfig = field(default_factory=FamilyConfig)


def run(cfg: SweepConfig) -> int:
    start = time.perf_counter()
    by_cme = Counter()
    bad = 0
    for s in range(cfg.count):
        fam = random_lattice_family(random.Random(cfg.seed + s), cfg.family)
        rep = verify_theorem1(fam)
        by_cme[rep.cme] += 1
        if not (rep.identity_holds and rep.pointwise_holds):
            bad += 1
            print(f"seed {cfg.seed + s}: (-1)^n CME = {rep.sign * rep.cme}, euler sum = {rep.euler_sum}")
    print(f"{cfg.count} families, {bad} failures, {time.perf_counter() - start:.2f}s")
    print("CME histogram:")
    for value in sorted(by_cme):
        print(f"  {value:4d}  {by_cme[value]}")
    return 1 if bad else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--n-max", type=int, default=3)
    ap.add_argument("--d-max", type=int, default=2)
    ap.add_argument("--coord-max", type=int, default=3)
    a = ap.parse_args()
    fam = FamilyConfig(n_max=a.n_max, d_max=a.d_max, coord_max=a.coord_max)
    return run(SweepConfig(count=a.count, seed=a.seed, family=fam))


if __name__ == "__main__":
    raise SystemExit(main())
