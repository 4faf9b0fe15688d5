#!/usr/bin/env python3
"""Lower/upper bounds on the convex threshold dimension for named complexes
and for joins with the forbidden graphs.

    python scripts/ctd_table.py --budget 16 --max-power 2
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from minkcx.complex import join, simplex
from minkcx.generate import c4_power, forbidden_graphs, path3
from minkcx.threshold import ctd_bounds


@dataclass
class TableConfig:
    budget: int = 16
    seed: int = 0
    max_power: int = 2


def cases(cfg: TableConfig):
    yield "simplex(3)", simplex(3)
    yield "path3", path3()
    for name, g in forbidden_graphs().items():
        yield name, g
        yield f"path3 * {name}", join(path3(), g)
    for k in range(2, cfg.max_power + 1):
        yield f"C4^{k}", c4_power(k)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--budget", type=int, default=16)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-power", type=int, default=2)
    a = ap.parse_args()
    cfg = TableConfig(a.budget, a.seed, a.max_power)
    print(f"{'complex':<16} {'n':>3} {'facets':>6} {'lower':>5} {'upper':>5} {'secs':>6}")
    for name, cx in cases(cfg):
        start = time.perf_counter()
        b = ctd_bounds(cx, budget=cfg.budget, seed=cfg.seed)
        flag = "*" if b.lower_evidence.heuristic else ""
        secs = time.perf_counter() - start
        print(f"{name:<16} {cx.n:>3} {len(cx.facets):>6} {b.lower:>4}{flag:1} {b.upper:>5} {secs:>6.2f}")
    print("* lower bound from the greedy packing (more than the exhaustive limit of blocks)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
