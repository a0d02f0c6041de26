#!/usr/bin/env python3
"""Large randomized verification run: complete-monotonicity certificates
plus the combinatorial-inequality fuzzer, printing a one-line verdict per
suite and writing the full margin tables to CSV.

Usage: python3 scripts/monotonicity_scan.py [--outdir runs] [--instances 500]
"""

import argparse
import os
import sys

from bernsimplex.cli import main as cli_main


def run(outdir: str, instances: int, trials: int, seed: int) -> int:
    os.makedirs(outdir, exist_ok=True)
    rc = cli_main([
        "cm-scan", "--d", "4", "--instances", str(instances),
        "--grid", "0.1:10:0.1", "--max-order", "7", "--seed", str(seed),
        "--out", os.path.join(outdir, "cm_scan.csv"),
    ])
    rc |= cli_main([
        "ineq-fuzz", "--trials", str(trials), "--dmax", "5", "--seed", str(seed),
        "--out", os.path.join(outdir, "ineq_fuzz.csv"),
    ])
    return rc


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="runs")
    ap.add_argument("--instances", type=int, default=500)
    ap.add_argument("--trials", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    sys.exit(run(args.outdir, args.instances, args.trials, args.seed))
