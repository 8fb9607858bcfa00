"""CSV snapshot export of phase-space fields.

Format: one comment header line
``# t=<float> nx=<int> nv=<int> xmin=<float> xmax=<float> vmin=<float>
vmax=<float> kind=<cell_avg|points>`` followed by nv rows of nx
comma-separated values (row index j ascending, column index i ascending).
Floats are written with shortest round-trip (repr) formatting.
"""

from __future__ import annotations

import numpy as np

from .errors import AfvpError
from .grids import Domain


def write_snapshot(path, values: np.ndarray, t: float, domain: Domain, kind: str) -> None:
    if kind not in ("cell_avg", "points"):
        raise AfvpError(f"unknown snapshot kind: {kind!r}")
    values = np.asarray(values, dtype=float)
    nx, nv = values.shape
    header = (
        f"# t={float(t)!r} nx={nx} nv={nv} "
        f"xmin={float(domain.x_min)!r} xmax={float(domain.x_max)!r} "
        f"vmin={float(domain.v_min)!r} vmax={float(domain.v_max)!r} kind={kind}"
    )
    lines = [header]
    for j in range(nv):
        lines.append(",".join(repr(float(x)) for x in values[:, j]))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_snapshot(path):
    """Returns (values array of shape (nx, nv), metadata dict)."""
    with open(path) as fh:
        header = fh.readline().strip()
        if not header.startswith("# "):
            raise AfvpError(f"{path}: missing snapshot header")
        meta = {}
        for token in header[2:].split():
            key, _, val = token.partition("=")
            meta[key] = val
        for key in ("nx", "nv"):
            meta[key] = int(meta[key])
        for key in ("t", "xmin", "xmax", "vmin", "vmax"):
            meta[key] = float(meta[key])
        rows = [list(map(float, line.split(","))) for line in fh if line.strip()]
    values = np.array(rows, dtype=float).T
    if values.shape != (meta["nx"], meta["nv"]):
        raise AfvpError(
            f"{path}: data shape {values.shape} disagrees with header "
            f"({meta['nx']}, {meta['nv']})"
        )
    return values, meta
