"""Conserved-quantity monitors, phase-space error, and rate fitting.

Quadrature choices (the underlying continuum quantities do not pin a discrete
form, so these are fixed here for reproducibility): integrals over the box use
composite Simpson on the half-spaced lattice; the momentum and kinetic energy
use cell-center velocities against the cell averages; for the mixed-DOF layout
the center field value entering the electric energy is recovered from the
Simpson x-average by the quadratic reconstruction.  Summations run in
ascending index order (plain numpy sums) so reruns reproduce round-off
bit-exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AfvpError
from .grids import InhomogeneousGrid, center_from_line_average
from .poisson import FieldProfile, density

CSV_COLUMNS = (
    "t",
    "electric_energy",
    "mass",
    "momentum",
    "l2norm",
    "kinetic_energy",
    "total_energy",
    "rho_dot_e",
)


@dataclass(frozen=True)
class DiagnosticsRow:
    t: float
    electric_energy: float
    mass: float
    momentum: float
    l2norm: float
    kinetic_energy: float
    total_energy: float
    rho_dot_e: float

    def to_csv_line(self) -> str:
        return ",".join(repr(float(getattr(self, c))) for c in CSV_COLUMNS)


def _composite_simpson_weights(n_stations: int) -> np.ndarray:
    return np.where(np.arange(n_stations) % 2 == 0, 1.0 / 3.0, 2.0 / 3.0)


def electric_field_centers(grid, field: FieldProfile) -> np.ndarray:
    """Center-station field: recovered from the Simpson x-average on the
    mixed-DOF layout, direct lattice values on the homogeneous one."""
    if isinstance(grid, InhomogeneousGrid):
        e = field.at_ifaces
        return center_from_line_average(field.line_avg(), e, np.roll(e, -1))
    return field.at_centers


def electric_energy(grid, field: FieldProfile) -> float:
    d = grid.domain
    e_lattice = np.empty(2 * d.n_x)
    e_lattice[0::2] = field.at_ifaces
    e_lattice[1::2] = electric_field_centers(grid, field)
    w = _composite_simpson_weights(e_lattice.size)
    return float(d.dx * np.sum(w * e_lattice**2))


def conserved_quantities(grid, field: FieldProfile, t: float) -> DiagnosticsRow:
    """One diagnostics sample: mass, momentum, L2 norm, energies, and the
    momentum-conservation criterion sum(rho_i E_i) of the Poisson solve."""
    d = grid.domain
    cell = grid.cell_averages()
    dxdv = d.dx * d.dv
    v_c = d.v_centers()

    mass = float(dxdv * cell.sum())
    momentum = float(dxdv * np.sum(v_c * cell.sum(axis=0)))
    kinetic = float(dxdv * np.sum(v_c**2 * cell.sum(axis=0)))

    lattice = grid.point_lattice()
    wx = _composite_simpson_weights(lattice.shape[0])
    wv = _composite_simpson_weights(lattice.shape[1])
    l2 = float(dxdv * np.sum(wx[:, None] * wv[None, :] * lattice**2))

    e_energy = electric_energy(grid, field)

    # the momentum criterion pairs the density vector fed to the Poisson
    # solver with the field it returned (their stations coincide)
    rho = density(grid)
    rde = float(np.sum(rho.stations * field.lattice))

    return DiagnosticsRow(
        t=t,
        electric_energy=e_energy,
        mass=mass,
        momentum=momentum,
        l2norm=l2,
        kinetic_energy=kinetic,
        total_energy=kinetic + e_energy,
        rho_dot_e=rde,
    )


def downscale_reference(ref: np.ndarray, target: int) -> np.ndarray:
    """Recursive 2x2 block means of a square power-of-two cell-average array
    down to target x target."""
    ref = np.asarray(ref, dtype=float)
    n = ref.shape[0]
    if ref.shape[0] != ref.shape[1]:
        raise AfvpError("reference downscaling expects a square array")
    for m in (n, target):
        if m < 1 or (m & (m - 1)) != 0:
            raise AfvpError(f"resolution {m} is not a power of two")
    if target > n:
        raise AfvpError("target resolution exceeds the reference resolution")
    out = ref
    while out.shape[0] > target:
        h = out.shape[0] // 2
        out = out.reshape(h, 2, h, 2).mean(axis=(1, 3))
    return out


def eps_vp(sol: np.ndarray, ref_scaled: np.ndarray) -> float:
    """Relative L1 phase-space error against the downscaled reference."""
    sol = np.asarray(sol, dtype=float)
    ref_scaled = np.asarray(ref_scaled, dtype=float)
    if sol.shape != ref_scaled.shape:
        raise AfvpError(f"shape mismatch: {sol.shape} vs {ref_scaled.shape}")
    denom = np.abs(ref_scaled).sum()
    if denom == 0.0:
        raise AfvpError("eps_vp undefined for an identically zero reference")
    return float(np.abs(sol - ref_scaled).sum() / denom)


def fit_exponential_rate(t, energy, window, mode: str = "decay_peaks") -> float:
    """Fit the field-amplitude rate gamma from an electric-energy trace.

    decay_peaks: least-squares slope of log(sqrt(energy)) at the strict local
    maxima inside the window, negated, so a damped signal gives gamma > 0.
    growth: slope of log(energy)/2 over all samples in the window.
    """
    t = np.asarray(t, dtype=float)
    energy = np.asarray(energy, dtype=float)
    t0, t1 = window
    mask = (t >= t0) & (t <= t1)
    tw, ew = t[mask], energy[mask]
    if mode == "growth":
        if tw.size < 2:
            raise AfvpError("growth fit needs at least two samples in the window")
        slope = np.polyfit(tw, 0.5 * np.log(ew), 1)[0]
        return float(slope)
    if mode != "decay_peaks":
        raise AfvpError(f"unknown fit mode: {mode!r}")
    interior = np.nonzero(
        (ew[1:-1] > ew[:-2]) & (ew[1:-1] > ew[2:])
    )[0] + 1
    if interior.size < 3:
        raise AfvpError(
            f"decay fit needs >= 3 energy peaks in the window, found {interior.size}"
        )
    slope = np.polyfit(tw[interior], 0.5 * np.log(ew[interior]), 1)[0]
    return float(-slope)
