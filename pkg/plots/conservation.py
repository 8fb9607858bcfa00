#!/usr/bin/env python3
"""Conservation-error curves from a diagnostics CSV: relative drifts of mass,
L2 norm, and total energy, the absolute momentum drift, and the Poisson
momentum criterion |sum rho_i E_i|, on a log scale."""

import argparse

import numpy as np

from common import read_diagnostics, save
import matplotlib.pyplot as plt

FLOOR = 1e-18


def build_figure(diag_path):
    diag = read_diagnostics(diag_path)
    t = diag["t"]
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for name, label in (
        ("mass", "|ΔM|/M(0)"),
        ("l2norm", "|ΔL2|/L2(0)"),
        ("total_energy", "|ΔW|/W(0)"),
    ):
        q = diag[name]
        drift = np.abs(q - q[0]) / abs(q[0])
        ax.semilogy(t, np.maximum(drift, FLOOR), lw=1.1, label=label)
    ax.semilogy(t, np.maximum(np.abs(diag["momentum"] - diag["momentum"][0]), FLOOR),
                lw=1.1, label="|ΔP|")
    ax.semilogy(t, np.maximum(np.abs(diag["rho_dot_e"]), FLOOR), lw=1.1,
                label=r"|$\sum \rho_i E_i$|")
    ax.set_xlabel("t")
    ax.set_ylabel("conservation error")
    ax.legend(fontsize=8, ncol=2)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    return fig


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("diagnostics")
    parser.add_argument("--output", required=True)
    args = parser.parse_args(argv)
    save(build_figure(args.diagnostics), args.output)


if __name__ == "__main__":
    main()
