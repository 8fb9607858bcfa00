"""Split advection operators L_X and L_V for the three scheme variants.

All three schemes update the grid by slice-wise 1D Active Flux operations;
every slice carries its own Courant number (its row velocity for L_X, the
column field value for L_V).  The variants differ in how the 2D cell average
is evolved:

* ``SecondOrderFluxScheme`` (af2): the 1D average closed form is applied
  directly to the (edge average, cell average) slices, which approximates the
  interface flux by the product of the separate v- and f-integrals.
* ``ThirdOrderFluxScheme`` (af3): edge quantities are traced to the half and
  full stages, nine-point tensor-Simpson flux integrals are assembled per
  interface, and the cell average is updated conservatively from fluxes that
  adjacent cells share bit-identically.
* ``DiscrepancyScheme`` (dd): every lattice row/column of the homogeneous
  point grid is advanced by the predictor plus conservation correction, with
  the stricter bound |eta| = 2|nu| <= 1.

During L_V the electric field is frozen at its most recently computed value
(the density, and hence the field, does not change under v-advection).
"""

from __future__ import annotations

from dataclasses import replace

import numpy as np

from . import advect1d as a1
from .errors import CFLError
from .grids import HomogeneousGrid, InhomogeneousGrid, center_from_line_average
from .poisson import FieldProfile


def _check_cfl(nu, bound: float, label: str) -> None:
    worst = float(np.max(np.abs(nu)))
    if worst > bound + 1e-12:
        idx = int(np.argmax(np.abs(np.atleast_1d(nu))))
        raise CFLError(
            f"{label}: slice {idx} has |Courant| = {worst:.6g} > {bound:g}"
        )


class SecondOrderFluxScheme:
    """Second-order flux integral operators on the mixed-DOF grid."""

    name = "af2"
    courant_bound = 1.0
    grid_kind = "inhomogeneous"

    def lx(self, grid: InhomogeneousGrid, dt: float) -> InhomogeneousGrid:
        d = grid.domain
        nu_n = d.v_ifaces() * dt / d.dx   # rows of nodes / x-edge averages
        nu_c = d.v_centers() * dt / d.dx  # rows of v-edge averages / cell averages
        _check_cfl(nu_n, 1.0, "L_X node rows")
        _check_cfl(nu_c, 1.0, "L_X cell rows")
        nodes = a1.af_interface_update(grid.nodes, grid.x_edge, nu_n, axis=0)
        x_edge = a1.af_average_update(grid.nodes, grid.x_edge, nu_n, axis=0)
        v_edge = a1.af_interface_update(grid.v_edge, grid.cell, nu_c, axis=0)
        cell = a1.af_average_update(grid.v_edge, grid.cell, nu_c, axis=0)
        return replace(grid, nodes=nodes, x_edge=x_edge, v_edge=v_edge, cell=cell)

    def lv(self, grid: InhomogeneousGrid, field: FieldProfile, dt: float) -> InhomogeneousGrid:
        d = grid.domain
        nu_e = -field.at_ifaces * dt / d.dv    # columns at x interfaces
        nu_c = -field.line_avg() * dt / d.dv   # columns at cell centers
        _check_cfl(nu_e, 1.0, "L_V interface columns")
        _check_cfl(nu_c, 1.0, "L_V center columns")
        nodes = a1.af_interface_update(grid.nodes, grid.v_edge, nu_e, axis=1)
        v_edge = a1.af_average_update(grid.nodes, grid.v_edge, nu_e, axis=1)
        x_edge = a1.af_interface_update(grid.x_edge, grid.cell, nu_c, axis=1)
        cell = a1.af_average_update(grid.x_edge, grid.cell, nu_c, axis=1)
        return replace(grid, nodes=nodes, x_edge=x_edge, v_edge=v_edge, cell=cell)


def flux_integral_x(node_stages, center_stages, v_bottom, v_center, v_top):
    """Nine-point tensor-Simpson flux of v*f through the vertical interfaces.

    ``node_stages`` and ``center_stages`` are (f at t^n, t^{n+1/2}, t^{n+1})
    triples of arrays indexed (interface station, v cell); the node arrays
    hold the bottom endpoints, their roll the top.  Velocity weights use the
    physical interface velocities (the top of the last cell is v_max, not the
    wrapped v_min).
    """
    n_n, n_h, n_f = node_stages
    c_n, c_h, c_f = center_stages
    tc_node = n_n + 4.0 * n_h + n_f
    tc_cent = c_n + 4.0 * c_h + c_f
    return (
        v_bottom[None, :] * tc_node
        + 4.0 * v_center[None, :] * tc_cent
        + v_top[None, :] * np.roll(tc_node, -1, axis=1)
    ) / 36.0


def flux_integral_v(node_stages, center_stages, a_left, a_center, a_right):
    """Nine-point tensor-Simpson flux of (q/m) E * f through the horizontal
    interfaces; the field is frozen at the current stage for all three time
    levels.  Arrays are indexed (x cell, interface station)."""
    n_n, n_h, n_f = node_stages
    c_n, c_h, c_f = center_stages
    tc_node = n_n + 4.0 * n_h + n_f
    tc_cent = c_n + 4.0 * c_h + c_f
    return (
        a_left[:, None] * tc_node
        + 4.0 * a_center[:, None] * tc_cent
        + a_right[:, None] * np.roll(tc_node, -1, axis=0)
    ) / 36.0


class ThirdOrderFluxScheme:
    """Third-order flux integral operators on the mixed-DOF grid."""

    name = "af3"
    courant_bound = 1.0
    grid_kind = "inhomogeneous"

    def lx(self, grid: InhomogeneousGrid, dt: float) -> InhomogeneousGrid:
        d = grid.domain
        nu_n = d.v_ifaces() * dt / d.dx
        nu_c = d.v_centers() * dt / d.dx
        _check_cfl(nu_n, 1.0, "L_X node rows")
        _check_cfl(nu_c, 1.0, "L_X cell rows")

        nodes_h = a1.af_interface_update(grid.nodes, grid.x_edge, 0.5 * nu_n, axis=0)
        nodes_f = a1.af_interface_update(grid.nodes, grid.x_edge, nu_n, axis=0)
        x_edge = a1.af_average_update(grid.nodes, grid.x_edge, nu_n, axis=0)

        # trace the v-edge line averages (no 1D conservation update; the cell
        # average is evolved by the explicit flux below)
        vedge_h = a1.af_interface_update(grid.v_edge, grid.cell, 0.5 * nu_c, axis=0)
        vedge_f = a1.af_interface_update(grid.v_edge, grid.cell, nu_c, axis=0)

        def centers(vedge, nodes):
            return center_from_line_average(vedge, nodes, np.roll(nodes, -1, axis=1))

        g = flux_integral_x(
            (grid.nodes, nodes_h, nodes_f),
            (centers(grid.v_edge, grid.nodes), centers(vedge_h, nodes_h), centers(vedge_f, nodes_f)),
            d.v_ifaces(),
            d.v_centers(),
            d.v_ifaces() + d.dv,
        )
        cell = grid.cell - (dt / d.dx) * (np.roll(g, -1, axis=0) - g)
        return replace(grid, nodes=nodes_f, x_edge=x_edge, v_edge=vedge_f, cell=cell)

    def lv(self, grid: InhomogeneousGrid, field: FieldProfile, dt: float) -> InhomogeneousGrid:
        d = grid.domain
        a_iface = -field.at_ifaces
        a_center_pt = -field.at_centers
        a_hat = -field.line_avg()
        nu_e = a_iface * dt / d.dv
        nu_c = a_hat * dt / d.dv
        _check_cfl(nu_e, 1.0, "L_V interface columns")
        _check_cfl(nu_c, 1.0, "L_V center columns")

        nodes_h = a1.af_interface_update(grid.nodes, grid.v_edge, 0.5 * nu_e, axis=1)
        nodes_f = a1.af_interface_update(grid.nodes, grid.v_edge, nu_e, axis=1)
        v_edge = a1.af_average_update(grid.nodes, grid.v_edge, nu_e, axis=1)

        xedge_h = a1.af_interface_update(grid.x_edge, grid.cell, 0.5 * nu_c, axis=1)
        xedge_f = a1.af_interface_update(grid.x_edge, grid.cell, nu_c, axis=1)

        def centers(xedge, nodes):
            return center_from_line_average(xedge, nodes, np.roll(nodes, -1, axis=0))

        h = flux_integral_v(
            (grid.nodes, nodes_h, nodes_f),
            (centers(grid.x_edge, grid.nodes), centers(xedge_h, nodes_h), centers(xedge_f, nodes_f)),
            a_iface,
            a_center_pt,
            np.roll(a_iface, -1),
        )
        cell = grid.cell - (dt / d.dv) * (np.roll(h, -1, axis=1) - h)
        return replace(grid, nodes=nodes_f, x_edge=xedge_f, v_edge=v_edge, cell=cell)


class DiscrepancyScheme:
    """Discrepancy-distribution operators on the homogeneous point lattice."""

    name = "dd"
    courant_bound = 0.5
    grid_kind = "homogeneous"

    def __init__(self, alpha: float = 1.0, beta: float = 1.0):
        a1.validate_distribution_params(alpha, beta)
        self.alpha = alpha
        self.beta = beta

    def lx(self, grid: HomogeneousGrid, dt: float) -> HomogeneousGrid:
        d = grid.domain
        eta = 2.0 * d.v_lattice() * dt / d.dx
        _check_cfl(eta, 1.0, "L_X lattice rows (eta)")
        points = a1.dd_step(grid.points, eta, axis=0, alpha=self.alpha, beta=self.beta)
        return replace(grid, points=points)

    def lv(self, grid: HomogeneousGrid, field: FieldProfile, dt: float) -> HomogeneousGrid:
        d = grid.domain
        eta = 2.0 * (-field.lattice) * dt / d.dv
        _check_cfl(eta, 1.0, "L_V lattice columns (eta)")
        points = a1.dd_step(grid.points, eta, axis=1, alpha=self.alpha, beta=self.beta)
        return replace(grid, points=points)


def make_scheme(name: str, alpha: float = 1.0, beta: float = 1.0):
    if name == "af2":
        return SecondOrderFluxScheme()
    if name == "af3":
        return ThirdOrderFluxScheme()
    if name == "dd":
        return DiscrepancyScheme(alpha=alpha, beta=beta)
    raise ValueError(f"unknown scheme: {name!r}")
