"""Parameter sweep over the generator families.

Builds each instance exactly, computes delta, mu, p_max and the dual
diameter, and writes one CSV row per instance together with the bound
each quantity is compared against.

    python3 scripts/sweep.py --out sweep.csv --random 200
"""
from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import asdict, dataclass

from diskarr.analysis import diameter_bound_general, diameter_bound_two, maximal_face_bound, verify_bounds
from diskarr.arrangement import build_arrangement
from diskarr.generators import comb_pair, grid_instance, random_instance, spiral_pair


@dataclass
class SweepConfig:
    spiral_deltas: tuple[int, ...] = (2, 3, 4, 5, 6, 8, 10)
    grid_n: tuple[int, ...] = (2, 3, 4)
    grid_k: tuple[int, ...] = (1, 2, 3)
    comb_teeth: tuple[int, ...] = (1, 2, 3, 4, 5, 6)
    random: int = 100
    random_n: tuple[int, ...] = (2, 3, 4, 5)
    max_vertices: int = 10
    seed: int = 0


@dataclass
class Row:
    family: str
    params: str
    n: int
    faces: int
    delta: int
    p_max: int
    mu: int
    diameter: int
    mu_bound: int
    diameter_bound: int
    ok: bool
    seconds: float


def instances(cfg: SweepConfig):
    for d in cfg.spiral_deltas:
        yield "spiral", f"delta={d}", spiral_pair(d)
    for n in cfg.grid_n:
        for k in cfg.grid_k:
            yield "grid", f"n={n} k={k}", grid_instance(n, k)
    for t in cfg.comb_teeth:
        yield "comb", f"teeth={t}", comb_pair(t)
    for i in range(cfg.random):
        n = cfg.random_n[i % len(cfg.random_n)]
        seed = cfg.seed + i
        yield "random", f"n={n} seed={seed}", random_instance(n, cfg.max_vertices, seed)


def run(cfg: SweepConfig) -> list[Row]:
    rows = []
    for family, params, inst in instances(cfg):
        t0 = time.perf_counter()
        arr = build_arrangement(inst.disks)
        rep = verify_bounds(arr)
        elapsed = time.perf_counter() - t0
        if arr.n == 2:
            mu_bound, diam_bound = rep.delta or 2, diameter_bound_two(rep.delta)
        else:
            mu_bound, diam_bound = maximal_face_bound(arr.n, rep.delta), diameter_bound_general(arr.n, rep.delta)
        rows.append(Row(family, params, arr.n, rep.faces, rep.delta, rep.p_max, rep.mu, rep.diameter,
                        mu_bound, diam_bound, rep.ok, round(elapsed, 4)))
    return rows


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", help="CSV path (default: stdout)")
    ap.add_argument("--random", type=int, default=SweepConfig.random, help="number of random instances")
    ap.add_argument("--seed", type=int, default=0, help="first random seed")
    args = ap.parse_args(argv)

    rows = run(SweepConfig(random=args.random, seed=args.seed))
    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        w = csv.DictWriter(fh, fieldnames=list(Row.__dataclass_fields__))
        w.writeheader()
        for r in rows:
            w.writerow(asdict(r))
    finally:
        if args.out:
            fh.close()
    bad = [r for r in rows if not r.ok]
    print(f"{len(rows)} instances, {len(bad)} with a failed bound", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
