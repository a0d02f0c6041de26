#!/usr/bin/env python3
"""Produce the scaled-integral convergence tables and the pointwise
Gaussian-limit comparison for several (r, s) pairs, writing one CSV per
experiment into an output directory.

Usage: python3 scripts/convergence_tables.py [--outdir runs]
"""

import argparse
import os

from bernsimplex.cli import main as cli_main


def run(outdir: str) -> None:
    os.makedirs(outdir, exist_ok=True)
    for d in (1, 2, 3):
        cli_main([
            "s-table", "--d", str(d), "--r", "1", "--s", "1",
            "--m-list", "10,20,40,80,160,320",
            "--out", os.path.join(outdir, f"s_table_d{d}.csv"),
        ])
    for d in (1, 2):
        for r, s in ((1, 1), (1, 2), (2, 2), (2, 3)):
            m_list = "16,64,256,1024" if d == 1 else "16,64,256"
            cli_main([
                "lclt-compare", "--d", str(d), "--r", str(r), "--s", str(s),
                "--m-list", m_list,
                "--out", os.path.join(outdir, f"lclt_d{d}_r{r}s{s}.csv"),
            ])


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="runs")
    run(ap.parse_args().outdir)
