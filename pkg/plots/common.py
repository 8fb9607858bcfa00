"""Shared readers and figure plumbing for the plot scripts.

These scripts are pull-only consumers of the solver's documented file
contracts (diagnostics CSV, snapshot CSV, convergence CSV); they never import
the solver package.
"""

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

DIAG_COLUMNS = (
    "t", "electric_energy", "mass", "momentum", "l2norm",
    "kinetic_energy", "total_energy", "rho_dot_e",
)


class SchemaError(SystemExit):
    """Input file does not match the documented schema."""

    def __init__(self, message):
        super().__init__(f"schema error: {message}")


def read_diagnostics(path):
    """Diagnostics CSV -> dict of column name to array."""
    with open(path) as fh:
        header = fh.readline().strip().split(",")
        if tuple(header) != DIAG_COLUMNS:
            raise SchemaError(f"{path}: unexpected diagnostics columns {header}")
        rows = [list(map(float, line.split(","))) for line in fh if line.strip()]
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    data = np.array(rows)
    return {name: data[:, k] for k, name in enumerate(DIAG_COLUMNS)}


def read_snapshot(path):
    """Snapshot CSV -> (values with shape (nx, nv), metadata dict)."""
    with open(path) as fh:
        header = fh.readline().strip()
        if not header.startswith("# "):
            raise SchemaError(f"{path}: missing snapshot header line")
        meta = {}
        for token in header[2:].split():
            key, _, val = token.partition("=")
            meta[key] = val
        try:
            for key in ("nx", "nv"):
                meta[key] = int(meta[key])
            for key in ("t", "xmin", "xmax", "vmin", "vmax"):
                meta[key] = float(meta[key])
            meta["kind"]
        except KeyError as exc:
            raise SchemaError(f"{path}: header misses field {exc}") from None
        rows = [list(map(float, line.split(","))) for line in fh if line.strip()]
    values = np.array(rows).T
    if values.shape != (meta["nx"], meta["nv"]):
        raise SchemaError(
            f"{path}: data shape {values.shape} vs header ({meta['nx']}, {meta['nv']})"
        )
    return values, meta


def read_convergence(path):
    """Convergence CSV -> (n, eps, order) arrays."""
    with open(path) as fh:
        header = fh.readline().strip()
        if header != "n,eps_vp,order":
            raise SchemaError(f"{path}: unexpected convergence columns {header!r}")
        rows = [line.split(",") for line in fh if line.strip()]
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    n = np.array([int(r[0]) for r in rows])
    eps = np.array([float(r[1]) for r in rows])
    order = np.array([float(r[2]) for r in rows])
    return n, eps, order


def axis_coords(meta):
    """Cell-center (or lattice) coordinates implied by a snapshot header."""
    dx = (meta["xmax"] - meta["xmin"]) / meta["nx"]
    dv = (meta["vmax"] - meta["vmin"]) / meta["nv"]
    x = meta["xmin"] + dx * (np.arange(meta["nx"]) + 0.5)
    v = meta["vmin"] + dv * (np.arange(meta["nv"]) + 0.5)
    if meta["kind"] == "points":
        x -= 0.5 * dx
        v -= 0.5 * dv
    return x, v


def save(fig, output):
    out_dir = os.path.dirname(os.path.abspath(output))
    os.makedirs(out_dir, exist_ok=True)
    fig.savefig(output, dpi=150)
    plt.close(fig)
    print(f"wrote {output}")
