"""Phase-space grid layouts for the split Active Flux schemes.

Two layouts are supported, both periodic in x and v:

* ``InhomogeneousGrid`` carries four classes of degrees of freedom per cell:
  nodal point values on the cell corners, line averages on the x- and v-edges,
  and the two-dimensional cell average.
* ``HomogeneousGrid`` is a pure point-value lattice at half-cell spacing, as
  used by the discrepancy-distribution scheme.

Indexing convention: entry ``(i, j)`` of every DOF array owns the degree of
freedom on the lower-left of cell ``(i, j)``, i.e. ``nodes[i, j]`` sits at
``(x_min + i*dx, v_min + j*dv)``, ``x_edge[i, j]`` is the average over the
cell's bottom edge, ``v_edge[i, j]`` the average over its left edge.  Periodic
wrap-around is plain index arithmetic mod ``n_x`` / ``n_v``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(5)
# rescaled to the unit interval
_GL01_NODES = 0.5 * (_GL_NODES + 1.0)
_GL01_WEIGHTS = 0.5 * _GL_WEIGHTS


@dataclass(frozen=True)
class Domain:
    """Periodic rectangular phase-space box with uniform cells.

    Positions are normalized to the Debye length, velocities to the thermal
    velocity.  ``n_x`` and ``n_v`` count cells, not points.
    """

    x_min: float
    x_max: float
    v_min: float
    v_max: float
    n_x: int
    n_v: int

    def __post_init__(self):
        if not self.x_max > self.x_min:
            raise ConfigError("domain requires x_max > x_min")
        if not self.v_max > self.v_min:
            raise ConfigError("domain requires v_max > v_min")
        if self.n_x < 4 or self.n_v < 4:
            raise ConfigError("domain requires n_x, n_v >= 4")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.n_x

    @property
    def dv(self) -> float:
        return (self.v_max - self.v_min) / self.n_v

    @property
    def length_x(self) -> float:
        return self.x_max - self.x_min

    def x_ifaces(self) -> np.ndarray:
        """Left cell interfaces x_{i-1/2}, length n_x."""
        return self.x_min + self.dx * np.arange(self.n_x)

    def x_centers(self) -> np.ndarray:
        return self.x_min + self.dx * (np.arange(self.n_x) + 0.5)

    def v_ifaces(self) -> np.ndarray:
        """Bottom cell interfaces v_{j-1/2}, length n_v."""
        return self.v_min + self.dv * np.arange(self.n_v)

    def v_centers(self) -> np.ndarray:
        return self.v_min + self.dv * (np.arange(self.n_v) + 0.5)

    def x_lattice(self) -> np.ndarray:
        """Half-spaced x stations (interfaces and centers interleaved), length 2 n_x."""
        return self.x_min + 0.5 * self.dx * np.arange(2 * self.n_x)

    def v_lattice(self) -> np.ndarray:
        return self.v_min + 0.5 * self.dv * np.arange(2 * self.n_v)


@dataclass(frozen=True)
class InitialCondition:
    """Analytic initial electron distribution f0(x, v).

    kind: 'weak_landau', 'strong_landau' (Maxwellian with density perturbation
    A cos(kx)) or 'two_stream' (two counter-streaming beams at +-v0).
    """

    kind: str
    amplitude: float
    wavenumber: float
    beam_velocity: float = 0.0

    def __post_init__(self):
        if self.kind not in ("weak_landau", "strong_landau", "two_stream"):
            raise ConfigError(f"unknown initial condition kind: {self.kind!r}")
        if self.amplitude < 0.0:
            raise ConfigError("perturbation amplitude must be >= 0")

    def check_commensurate(self, domain: Domain) -> None:
        """The perturbation must fit the periodic box an integer number of times."""
        cycles = self.wavenumber * domain.length_x / (2.0 * np.pi)
        if abs(cycles - round(cycles)) > 1e-9:
            raise ConfigError(
                f"wavenumber k={self.wavenumber} not commensurate with box "
                f"length {domain.length_x} (k*L/2pi = {cycles})"
            )

    def __call__(self, x, v):
        """Evaluate f0 at broadcastable position/velocity arrays."""
        x = np.asarray(x, dtype=float)
        v = np.asarray(v, dtype=float)
        pert = 1.0 + self.amplitude * np.cos(self.wavenumber * x)
        norm = 1.0 / np.sqrt(2.0 * np.pi)
        if self.kind == "two_stream":
            v0 = self.beam_velocity
            maxw = 0.5 * norm * (
                np.exp(-0.5 * (v - v0) ** 2) + np.exp(-0.5 * (v + v0) ** 2)
            )
        else:
            maxw = norm * np.exp(-0.5 * v**2)
        return maxw * pert


@dataclass
class InhomogeneousGrid:
    """Mixed-DOF Active Flux grid (nodes, edge line-averages, cell averages)."""

    domain: Domain
    nodes: np.ndarray   #: f at (x_{i-1/2}, v_{j-1/2}), shape (n_x, n_v)
    x_edge: np.ndarray  #: x-line-average over the bottom edge of cell (i, j)
    v_edge: np.ndarray  #: v-line-average over the left edge of cell (i, j)
    cell: np.ndarray    #: cell average over cell (i, j)

    def cell_averages(self) -> np.ndarray:
        return self.cell

    def point_lattice(self) -> np.ndarray:
        """Recover point values on the half-spaced lattice by inverting the
        quadratic (Simpson-consistent) reconstruction per edge and per cell."""
        nodes_r = np.roll(self.nodes, -1, axis=0)
        nodes_u = np.roll(self.nodes, -1, axis=1)
        mid_x = center_from_line_average(self.x_edge, self.nodes, nodes_r)
        mid_v = center_from_line_average(self.v_edge, self.nodes, nodes_u)
        corners = self.nodes + nodes_r + nodes_u + np.roll(nodes_r, -1, axis=1)
        mids = mid_x + np.roll(mid_x, -1, axis=1) + mid_v + np.roll(mid_v, -1, axis=0)
        centers = (36.0 * self.cell - corners - 4.0 * mids) / 16.0
        n_x, n_v = self.domain.n_x, self.domain.n_v
        lattice = np.empty((2 * n_x, 2 * n_v))
        lattice[0::2, 0::2] = self.nodes
        lattice[1::2, 0::2] = mid_x
        lattice[0::2, 1::2] = mid_v
        lattice[1::2, 1::2] = centers
        return lattice


@dataclass
class HomogeneousGrid:
    """Point-value-only lattice at half-cell spacing (discrepancy scheme)."""

    domain: Domain
    points: np.ndarray  #: f at (x_min + p dx/2, v_min + q dv/2), shape (2 n_x, 2 n_v)

    def cell_averages(self) -> np.ndarray:
        """Simpson cell averages reconstructed from the point lattice."""
        ex = self.points[0::2, :]
        cx = self.points[1::2, :]
        line_x = (ex + 4.0 * cx + np.roll(ex, -1, axis=0)) / 6.0
        ev = line_x[:, 0::2]
        cv = line_x[:, 1::2]
        return (ev + 4.0 * cv + np.roll(ev, -1, axis=1)) / 6.0

    def point_lattice(self) -> np.ndarray:
        return self.points


def simpson_line_average(endpoint_a, midpoint, endpoint_b):
    """Simpson average (a + 4 m + b) / 6 of a quantity along one edge."""
    return (endpoint_a + 4.0 * midpoint + endpoint_b) / 6.0


def simpson_cell_average(corners, edge_midpoints, center):
    """Tensor-Simpson cell average from the nine point values of one cell.

    ``corners`` is (ll, lr, ul, ur), ``edge_midpoints`` is (bottom, top, left,
    right).  Implemented as ``simpson_line_average`` applied twice, which is
    algebraically the familiar (corners + 4 edges + 16 center)/36 combination.
    """
    ll, lr, ul, ur = corners
    bottom, top, left, right = edge_midpoints
    line_bottom = simpson_line_average(ll, bottom, lr)
    line_center = simpson_line_average(left, center, right)
    line_top = simpson_line_average(ul, top, ur)
    return simpson_line_average(line_bottom, line_center, line_top)


def center_from_line_average(avg, left_end, right_end):
    """Midpoint value of the quadratic with given endpoint values and average."""
    return (6.0 * avg - left_end - right_end) / 4.0


def _lattice_eval(ic: InitialCondition, domain: Domain) -> np.ndarray:
    x = domain.x_lattice()
    v = domain.v_lattice()
    return ic(x[:, None], v[None, :])


def init_inhomogeneous(
    domain: Domain, ic: InitialCondition, quadrature: str = "analytic_quadrature"
) -> InhomogeneousGrid:
    """Initialize the mixed-DOF grid from an analytic initial condition.

    Parameters
    ----------
    quadrature : {'analytic_quadrature', 'simpson'}
        'analytic_quadrature' computes edge and cell averages with 5-point
        tensor Gauss-Legendre quadrature per edge/cell (error far below scheme
        order); 'simpson' builds them with the Simpson formulas from point
        values on the half-spaced lattice.
    """
    ic.check_commensurate(domain)
    xi = domain.x_ifaces()
    vi = domain.v_ifaces()
    nodes = ic(xi[:, None], vi[None, :])
    if quadrature == "simpson":
        lattice = _lattice_eval(ic, domain)
        even_x = lattice[0::2, :]
        odd_x = lattice[1::2, :]
        line_x = simpson_line_average(even_x, odd_x, np.roll(even_x, -1, axis=0))
        x_edge = line_x[:, 0::2]
        v_edge = simpson_line_average(
            lattice[0::2, 0::2], lattice[0::2, 1::2], np.roll(lattice[0::2, 0::2], -1, axis=1)
        )
        cell = simpson_line_average(
            line_x[:, 0::2], line_x[:, 1::2], np.roll(line_x[:, 0::2], -1, axis=1)
        )
    elif quadrature == "analytic_quadrature":
        dx, dv = domain.dx, domain.dv
        gx = xi[:, None] + dx * _GL01_NODES[None, :]          # (n_x, 5)
        gv = vi[:, None] + dv * _GL01_NODES[None, :]          # (n_v, 5)
        w = _GL01_WEIGHTS
        # x-edges: integrate over x at fixed v interface
        x_edge = np.einsum("g,igj->ij", w, ic(gx[:, :, None], vi[None, None, :]))
        # v-edges: integrate over v at fixed x interface
        v_edge = np.einsum("g,ijg->ij", w, ic(xi[:, None, None], gv[None, :, :]))
        cell = np.einsum(
            "g,h,igjh->ij", w, w, ic(gx[:, :, None, None], gv[None, None, :, :])
        )
    else:
        raise ConfigError(f"unknown init quadrature: {quadrature!r}")
    return InhomogeneousGrid(domain, nodes, x_edge, v_edge, cell)


def init_homogeneous(domain: Domain, ic: InitialCondition) -> HomogeneousGrid:
    """Initialize the point lattice; no integrals are needed for this layout."""
    ic.check_commensurate(domain)
    return HomogeneousGrid(domain, _lattice_eval(ic, domain))


def histopolate_cell_centers(cell_avg: np.ndarray) -> np.ndarray:
    """Fourth-order histopolation of cell averages to cell-center point values.

    Applies the periodic nine-point stencil
    (676 f_ij - 26 * 4-neighbours + diagonals) / 576 (weights sum to 1).
    """
    c = np.asarray(cell_avg, dtype=float)
    xp = np.roll(c, -1, axis=0)
    xm = np.roll(c, 1, axis=0)
    return (
        676.0 * c
        - 26.0 * (xp + xm + np.roll(c, -1, axis=1) + np.roll(c, 1, axis=1))
        + np.roll(xp, -1, axis=1) + np.roll(xp, 1, axis=1)
        + np.roll(xm, -1, axis=1) + np.roll(xm, 1, axis=1)
    ) / 576.0


def histopolate_line_midpoints(line_avg: np.ndarray, axis: int = 0) -> np.ndarray:
    """Fourth-order histopolation of line averages to midpoint values,
    (26 f_i - f_{i+1} - f_{i-1}) / 24 along the given axis, periodic."""
    f = np.asarray(line_avg, dtype=float)
    return (26.0 * f - np.roll(f, -1, axis=axis) - np.roll(f, 1, axis=axis)) / 24.0


PRESET_DOMAINS = {
    "weak_landau": dict(x_min=-2.0 * np.pi, x_max=2.0 * np.pi, v_min=-5.0, v_max=5.0),
    "strong_landau": dict(x_min=-2.0 * np.pi, x_max=2.0 * np.pi, v_min=-5.0, v_max=5.0),
    "two_stream": dict(x_min=-5.0 * np.pi, x_max=5.0 * np.pi, v_min=-10.0, v_max=10.0),
}

PRESET_PARAMS = {
    "weak_landau": dict(amplitude=1e-3, wavenumber=0.5, beam_velocity=0.0),
    "strong_landau": dict(amplitude=0.5, wavenumber=0.5, beam_velocity=0.0),
    "two_stream": dict(amplitude=1e-3, wavenumber=0.2, beam_velocity=3.0),
}
