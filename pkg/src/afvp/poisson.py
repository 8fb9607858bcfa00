"""Charge density moments and the periodic spectral Poisson solve.

Normalized units: eps0 = 1, electron charge-to-mass ratio -1, and an immobile
neutralizing ion background of density 1, so the net charge density is
``rho = 1 - n_e`` and the field solves ``phi'' = -rho``, ``E = -phi'``.

The solve always operates on the half-spaced station lattice (2 n_x uniform
stations: cell interfaces and centers interleaved), so interface and center
field values come from a single transform.  The mixed-DOF grid feeds that
lattice through the three-step moment pipeline (integrate the v-edge line
averages, integrate the cell averages, recover center values from the
quadratic reconstruction); the homogeneous grid integrates its point values
with composite Simpson directly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError
from .grids import (
    HomogeneousGrid,
    InhomogeneousGrid,
    center_from_line_average,
    simpson_line_average,
)


@dataclass(frozen=True)
class ChargeDensity:
    """Net charge density (ion background minus electrons).

    ``stations`` interleaves interface and center values on the half-spaced
    lattice; ``line_avg`` carries the x-line-averaged density when the source
    grid provides cell averages (mixed-DOF layout), else None.
    """

    stations: np.ndarray
    line_avg: np.ndarray | None = None

    @property
    def at_ifaces(self) -> np.ndarray:
        return self.stations[0::2]

    @property
    def at_centers(self) -> np.ndarray:
        return self.stations[1::2]


@dataclass(frozen=True)
class FieldProfile:
    """Electric field on the half-spaced lattice plus derived representations."""

    lattice: np.ndarray

    @property
    def at_ifaces(self) -> np.ndarray:
        return self.lattice[0::2]

    @property
    def at_centers(self) -> np.ndarray:
        return self.lattice[1::2]

    def line_avg(self) -> np.ndarray:
        """Simpson x-averages E_hat_i = (E_{i-1/2} + 4 E_i + E_{i+1/2}) / 6."""
        e = self.at_ifaces
        return simpson_line_average(e, self.at_centers, np.roll(e, -1))


def density_inhomogeneous(grid: InhomogeneousGrid) -> ChargeDensity:
    """Moment pipeline on the mixed-DOF grid.

    Electron density at the interfaces from the v-edge line averages, line
    averages from the cell averages, center point values by evaluating the
    1D reconstruction at the cell midpoint; then background subtraction.
    """
    dv = grid.domain.dv
    ne_iface = dv * grid.v_edge.sum(axis=1)
    ne_hat = dv * grid.cell.sum(axis=1)
    ne_center = center_from_line_average(ne_hat, ne_iface, np.roll(ne_iface, -1))
    stations = np.empty(2 * grid.domain.n_x)
    stations[0::2] = 1.0 - ne_iface
    stations[1::2] = 1.0 - ne_center
    return ChargeDensity(stations=stations, line_avg=1.0 - ne_hat)


def density_homogeneous(grid: HomogeneousGrid) -> ChargeDensity:
    """Composite Simpson moment of the point lattice at every x station."""
    n_v = grid.domain.n_v
    w = np.where(np.arange(2 * n_v) % 2 == 0, 1.0 / 3.0, 2.0 / 3.0)
    ne = grid.domain.dv * (grid.points * w[None, :]).sum(axis=1)
    return ChargeDensity(stations=1.0 - ne, line_avg=None)


def density(grid) -> ChargeDensity:
    if isinstance(grid, InhomogeneousGrid):
        return density_inhomogeneous(grid)
    return density_homogeneous(grid)


def solve_poisson_spectral(rho, length: float, stations=None) -> np.ndarray:
    """Spectral solve of phi'' = -rho, E = -phi' on a uniform periodic grid.

    Returns E at the same stations, in the zero-mean gauge: E_hat(kappa) =
    -i rho_hat(kappa) / kappa for kappa != 0 and E_hat(0) = 0.  The residual
    mean of rho is discarded (solvability); the Nyquist mode is zeroed.
    """
    rho = np.asarray(rho, dtype=float)
    if stations is not None:
        spacing = np.diff(np.asarray(stations, dtype=float))
        if len(stations) != len(rho) or not np.allclose(spacing, spacing[0], rtol=1e-12, atol=0):
            raise ConfigError("Poisson solve requires uniformly spaced stations")
    n = rho.size
    rho_hat = np.fft.rfft(rho - rho.mean())
    kappa = 2.0 * np.pi / length * np.arange(rho_hat.size)
    e_hat = np.zeros_like(rho_hat)
    e_hat[1:] = -1j * rho_hat[1:] / kappa[1:]
    if n % 2 == 0:
        e_hat[-1] = 0.0
    return np.fft.irfft(e_hat, n=n)


def field_to_profile(e_stations: np.ndarray) -> FieldProfile:
    """Wrap station field values; the Simpson x-average representation needed
    by the mixed-DOF layout is derived on demand."""
    return FieldProfile(lattice=np.asarray(e_stations, dtype=float))


def solve_field(grid) -> FieldProfile:
    """Density moment + spectral solve for either grid layout."""
    rho = density(grid)
    e = solve_poisson_spectral(rho.stations, grid.domain.length_x)
    return field_to_profile(e)
