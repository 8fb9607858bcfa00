#!/usr/bin/env python3
"""Phase-space heatmap of one snapshot file."""

import argparse

from common import read_snapshot, save
import matplotlib.pyplot as plt


def build_figure(snapshot_path, cmap="viridis"):
    values, meta = read_snapshot(snapshot_path)
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    im = ax.imshow(
        values.T,
        origin="lower",
        aspect="auto",
        extent=(meta["xmin"], meta["xmax"], meta["vmin"], meta["vmax"]),
        cmap=cmap,
    )
    fig.colorbar(im, ax=ax, label="f(x, v)")
    ax.set_xlabel("x")
    ax.set_ylabel("v")
    ax.set_title(f"{meta['kind']} at t = {meta['t']:g}")
    fig.tight_layout()
    return fig


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("snapshot", help="snapshot CSV file")
    parser.add_argument("--cmap", default="viridis")
    parser.add_argument("--output", required=True)
    args = parser.parse_args(argv)
    save(build_figure(args.snapshot, args.cmap), args.output)


if __name__ == "__main__":
    main()
