#!/usr/bin/env python3
"""Run the full 4 methods x 4 signals benchmark and print the summary tables.

    python scripts/run_grid.py --out-dir results --trials 500 --seed 0

Writes the same files as ``spikecoding bench`` (feature CSVs, manifest,
reconstruction_error.csv, sparsity.csv, timing.csv, means.csv, params.csv).
"""
import argparse
import sys

from spikecoding.cli import main as cli_main


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", default="results")
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--length", type=int, default=16384)
    args = ap.parse_args()

    code = cli_main([
        "bench", "--out-dir", args.out_dir, "--trials", str(args.trials), "--seed", str(args.seed),
        "--repeats", str(args.repeats), "--length", str(args.length),
    ])
    if code == 0:
        cli_main(["report", "--out-dir", args.out_dir])
    return code


if __name__ == "__main__":
    sys.exit(main())
