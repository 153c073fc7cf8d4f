#!/usr/bin/env python3
"""Plot the four generated benchmark signals (needs matplotlib).

    python scripts/plot_signals.py --out signals.png
"""
import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from spikecoding.generators import KINDS, GeneratorSpec, generate  # noqa: E402


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="signals.png")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--length", type=int, default=16384)
    args = ap.parse_args()

    fig, axes = plt.subplots(4, 1, figsize=(8, 7), sharex=True)
    for ax, kind, tag in zip(axes, KINDS, "abcd"):
        ax.plot(generate(GeneratorSpec(kind, length=args.length, seed=args.seed)), lw=0.5)
        ax.set_title(f"({tag}) {kind}", fontsize=9, loc="left")
        ax.grid(True, lw=0.3)
    axes[-1].set_xlabel("Step")
    fig.supylabel("Amplitude")
    fig.tight_layout()
    fig.savefig(args.out, dpi=120)
    print(args.out)


if __name__ == "__main__":
    main()
