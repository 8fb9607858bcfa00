#!/usr/bin/env python3
"""Velocity cross-section f(x0, v) through a snapshot, at the column closest
to the requested position."""

import argparse

import numpy as np

from common import axis_coords, read_snapshot, save
import matplotlib.pyplot as plt


def build_figure(snapshot_path, x0):
    values, meta = read_snapshot(snapshot_path)
    x, v = axis_coords(meta)
    i = int(np.argmin(np.abs(x - x0)))
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(v, values[i, :], lw=1.2)
    ax.set_xlabel("v")
    ax.set_ylabel(f"f(x={x[i]:.3g}, v)")
    ax.set_title(f"cross-section at t = {meta['t']:g}")
    ax.grid(alpha=0.3)
    fig.tight_layout()
    return fig


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("snapshot")
    parser.add_argument("--x", type=float, required=True, help="cut position")
    parser.add_argument("--output", required=True)
    args = parser.parse_args(argv)
    save(build_figure(args.snapshot, args.x), args.output)


if __name__ == "__main__":
    main()
