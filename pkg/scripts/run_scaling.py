#!/usr/bin/env python3
"""Scaling sweep on uniform synthetic data.

Times every selected algorithm over a range of point counts at fixed
density and distance threshold, one subprocess per cell, and writes the
CSV used for scaling plots.
"""

import argparse

from geosoc.bench import BenchConfig, run_bench
from geosoc.datagen import Distribution


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--algos", default="exact-r12,approx,clique")
    ap.add_argument("--n", default="10000,20000,50000,100000")
    ap.add_argument("--density", type=float, default=0.008)
    ap.add_argument("--d", type=float, default=30.0)
    ap.add_argument("--distribution", choices=["uniform", "gaussian"], default="uniform")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--timeout-s", type=float, default=8000.0)
    ap.add_argument("--out", default="scaling.csv")
    args = ap.parse_args()

    cfg = BenchConfig(
        algos=tuple(args.algos.split(",")),
        ns=tuple(int(x) for x in args.n.split(",")),
        densities=(args.density,),
        ds=(args.d,),
        distribution=Distribution(args.distribution),
        seed=args.seed,
        timeout_s=args.timeout_s,
    )
    rows = run_bench(cfg, args.out)
    for row in rows:
        print(row.csv_row())
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
