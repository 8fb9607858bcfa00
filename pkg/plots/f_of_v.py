#!/usr/bin/env python3
"""Integrated velocity distribution F(v) = integral of f over x, computed from
a snapshot by summing columns times the cell width."""

import argparse

from common import axis_coords, read_snapshot, save
import matplotlib.pyplot as plt


def build_figure(snapshot_paths, labels):
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for path, label in zip(snapshot_paths, labels):
        values, meta = read_snapshot(path)
        dx = (meta["xmax"] - meta["xmin"]) / meta["nx"]
        _, v = axis_coords(meta)
        big_f = values.sum(axis=0) * dx
        ax.plot(v, big_f, lw=1.2, label=f"{label} (t={meta['t']:g})")
    ax.set_xlabel("v")
    ax.set_ylabel("F(v, t)")
    ax.legend(fontsize=8)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    return fig


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("snapshots", nargs="+")
    parser.add_argument("--labels", default=None)
    parser.add_argument("--output", required=True)
    args = parser.parse_args(argv)
    labels = args.labels.split(",") if args.labels else list(args.snapshots)
    if len(labels) != len(args.snapshots):
        raise SystemExit("number of labels must match number of input files")
    save(build_figure(args.snapshots, labels), args.output)


if __name__ == "__main__":
    main()
