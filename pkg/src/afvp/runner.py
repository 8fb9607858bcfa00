"""Experiment orchestration: single runs, file output, convergence sweeps."""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from . import diagnostics as diag
from .config import SimConfig
from .errors import ConfigError
from .grids import histopolate_cell_centers, init_homogeneous, init_inhomogeneous
from .operators import make_scheme
from .snapshots import write_snapshot
from .splitting import SimState, initial_field, plan_steps, step


def initial_state(config: SimConfig) -> SimState:
    domain = config.domain()
    ic = config.initial_condition()
    if config.scheme == "dd":
        grid = init_homogeneous(domain, ic)
    else:
        grid = init_inhomogeneous(domain, ic, config.init_quadrature)
    return SimState(grid=grid, field=initial_field(grid), t=0.0)


def pick_dt(config: SimConfig, state: SimState) -> float:
    """Fixed step size: cfl * min(dx/|v|max, dv/|E0|max); the x bound uses the
    largest velocity magnitude in the box.  Sub-step Courant numbers are
    checked at runtime and abort the run if the field grows past the bound."""
    domain = config.domain()
    v_max = max(abs(domain.v_min), abs(domain.v_max))
    dt = config.cfl * domain.dx / v_max
    e_max = float(np.max(np.abs(state.field.lattice)))
    if e_max > 0.0:
        dt = min(dt, config.cfl * domain.dv / e_max)
    return dt


@dataclass
class RunResult:
    state: SimState
    rows: list
    dt: float


def simulate(config: SimConfig, observer=None) -> RunResult:
    """Run a configured simulation in memory.

    ``observer(step_index, state)`` is called after t=0 setup (index 0) and
    after every step; diagnostics rows are sampled every ``diag_every`` steps
    and always at t=0 and t_max.
    """
    state = initial_state(config)
    ops = make_scheme(config.scheme, alpha=config.alpha, beta=config.beta)
    dt = pick_dt(config, state)
    sizes = plan_steps(config.t_max, dt)

    rows = [diag.conserved_quantities(state.grid, state.field, state.t)]
    if observer is not None:
        observer(0, state)
    for k, h in enumerate(sizes, start=1):
        state = step(state, h, config.splitting, ops)
        if k % config.diag_every == 0 or k == len(sizes):
            rows.append(diag.conserved_quantities(state.grid, state.field, state.t))
        if observer is not None:
            observer(k, state)
    return RunResult(state=state, rows=rows, dt=dt)


def _write_diagnostics(path, rows) -> None:
    lines = [",".join(diag.CSV_COLUMNS)]
    lines.extend(row.to_csv_line() for row in rows)
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def run(config: SimConfig, output_dir=None, histopolate: bool = False) -> RunResult:
    """Run a simulation and write diagnostics and snapshots.

    Writes ``diagnostics.csv`` plus one cell-average snapshot per requested
    time (and a histopolated point-value snapshot when enabled).  Snapshots
    are emitted at the first state whose time reaches the requested time;
    requested times beyond t_max are ignored.
    """
    out = output_dir if output_dir is not None else config.output_dir
    os.makedirs(out, exist_ok=True)
    pending = sorted(config.snapshot_times)

    def emit(state):
        cell = state.grid.cell_averages()
        tag = f"t{pending[0]:.6f}"
        write_snapshot(
            os.path.join(out, f"snapshot_cell_avg_{tag}.csv"),
            cell, state.t, state.grid.domain, "cell_avg",
        )
        if histopolate:
            write_snapshot(
                os.path.join(out, f"snapshot_points_{tag}.csv"),
                histopolate_cell_centers(cell), state.t, state.grid.domain, "points",
            )
        pending.pop(0)

    def observer(_, state):
        while pending and state.t >= pending[0] - 1e-12:
            emit(state)

    result = simulate(config, observer=observer)
    _write_diagnostics(os.path.join(out, "diagnostics.csv"), result.rows)
    return result


@dataclass
class ConvergenceRow:
    n: int
    eps: float
    order: float  # NaN on the coarsest level


def convergence(config: SimConfig, levels, reference: int) -> list:
    """Self-convergence sweep: run each level and the reference with identical
    cfl and t_max, downscale the reference cell averages, tabulate the
    relative L1 error and the observed order between successive levels."""
    levels = sorted(int(n) for n in levels)
    reference = int(reference)
    for n in [*levels, reference]:
        if n < 4 or (n & (n - 1)) != 0:
            raise ConfigError(f"convergence resolutions must be powers of two >= 4, got {n}")
    if reference <= max(levels):
        raise ConfigError(
            f"reference resolution {reference} must exceed the largest level {max(levels)}"
        )
    ref_cells = simulate(config.with_resolution(reference)).state.grid.cell_averages()
    rows = []
    prev_eps = None
    for n in levels:
        cells = simulate(config.with_resolution(n)).state.grid.cell_averages()
        eps = diag.eps_vp(cells, diag.downscale_reference(ref_cells, n))
        order = float("nan") if prev_eps is None else float(np.log2(prev_eps / eps))
        rows.append(ConvergenceRow(n=n, eps=eps, order=order))
        prev_eps = eps
    return rows


def write_convergence(path, rows) -> None:
    lines = ["n,eps_vp,order"]
    for row in rows:
        lines.append(f"{row.n},{row.eps!r},{row.order!r}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
