#!/usr/bin/env python3
"""Overlay original and reconstructed signals from a bench output directory.

    python scripts/plot_reconstruction.py results --signal sinusoidal
"""
import argparse
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from spikecoding.csvio import FEATURE_HEADER, read_csv  # noqa: E402


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("bench_dir")
    ap.add_argument("--signal", default="sinusoidal")
    ap.add_argument("--out")
    args = ap.parse_args()
    root = Path(args.bench_dir)

    _, manifest = read_csv(root / "manifest.csv", ["feature", "method", "signal"])
    rows = [r for r in manifest if r[2] == args.signal]
    fig, axes = plt.subplots(len(rows), 1, figsize=(8, 2 * len(rows)), sharex=True, squeeze=False)
    for ax, (feature, method, _) in zip(axes[:, 0], rows):
        _, data = read_csv(root / f"reconstruction_feature_{feature}.csv", FEATURE_HEADER)
        arr = np.array(data, dtype=float)
        ax.plot(arr[:, 0], arr[:, 1], lw=0.6, label="original")
        ax.plot(arr[:, 0], arr[:, 2], lw=0.6, label="reconstructed")
        ax.set_title(f"{method.upper()}  mse={arr[-1, 3]:.4g}", fontsize=9, loc="left")
    axes[0, 0].legend(fontsize=8)
    fig.tight_layout()
    out = args.out or str(root / f"reconstruction_{args.signal}.png")
    fig.savefig(out, dpi=120)
    print(out)


if __name__ == "__main__":
    main()
