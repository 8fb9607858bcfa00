#!/usr/bin/env python3
"""Electric-energy trace on a log scale, with an optional analytic damping
guide line exp(-2 gamma t) anchored at the first energy peak."""

import argparse

import numpy as np

from common import read_diagnostics, save
import matplotlib.pyplot as plt


def build_figure(diag_paths, labels, guide_rate=None):
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    t_ref, e_ref = None, None
    for path, label in zip(diag_paths, labels):
        diag = read_diagnostics(path)
        ax.semilogy(diag["t"], diag["electric_energy"], lw=1.2, label=label)
        if t_ref is None:
            t_ref, e_ref = diag["t"], diag["electric_energy"]
    if guide_rate is not None:
        anchor = np.argmax(e_ref[: max(2, len(e_ref) // 8)])
        guide = e_ref[anchor] * np.exp(-2.0 * guide_rate * (t_ref - t_ref[anchor]))
        ax.semilogy(t_ref, guide, "k--", lw=1.0,
                    label=f"analytic damping $\\gamma$={guide_rate}")
    ax.set_xlabel("t")
    ax.set_ylabel("electric energy")
    ax.legend(loc="best", fontsize=8)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    return fig


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("diagnostics", nargs="+", help="diagnostics CSV file(s)")
    parser.add_argument("--labels", default=None, help="comma-separated curve labels")
    parser.add_argument("--guide-rate", type=float, default=None,
                        help="damping rate for the dashed analytic guide line")
    parser.add_argument("--output", required=True, help="output image path")
    args = parser.parse_args(argv)
    labels = (args.labels.split(",") if args.labels
              else [p for p in args.diagnostics])
    if len(labels) != len(args.diagnostics):
        raise SystemExit("number of labels must match number of input files")
    fig = build_figure(args.diagnostics, labels, args.guide_rate)
    save(fig, args.output)


if __name__ == "__main__":
    main()
