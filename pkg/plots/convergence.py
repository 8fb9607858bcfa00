#!/usr/bin/env python3
"""Grid-convergence plot: eps_VP against resolution on log-log axes, one curve
per convergence table, with second/third-order slope guides."""

import argparse

import numpy as np

from common import read_convergence, save
import matplotlib.pyplot as plt


def build_figure(table_paths, labels):
    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    n_all = []
    eps_anchor = None
    for path, label in zip(table_paths, labels):
        n, eps, _ = read_convergence(path)
        ax.loglog(n, eps, "o-", lw=1.2, label=label)
        n_all.extend(n.tolist())
        if eps_anchor is None:
            eps_anchor = eps[0]
    n_guide = np.array([min(n_all), max(n_all)])
    for order, style in ((2, ":"), (3, "--")):
        guide = eps_anchor * (n_guide / n_guide[0]) ** (-order)
        ax.loglog(n_guide, guide, f"k{style}", lw=0.8, label=f"order {order}")
    ax.set_xlabel("N")
    ax.set_ylabel(r"$\epsilon_{VP}$")
    ax.legend(fontsize=8)
    ax.grid(alpha=0.3, which="both")
    fig.tight_layout()
    return fig


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("tables", nargs="+", help="convergence CSV file(s)")
    parser.add_argument("--labels", default=None)
    parser.add_argument("--output", required=True)
    args = parser.parse_args(argv)
    labels = args.labels.split(",") if args.labels else list(args.tables)
    if len(labels) != len(args.tables):
        raise SystemExit("number of labels must match number of input files")
    save(build_figure(args.tables, labels), args.output)


if __name__ == "__main__":
    main()
