"""One-dimensional constant-coefficient Active Flux kernels.

Two families are implemented, both on periodic slices and both valid for
signed Courant numbers (negative values arise from the backward sub-steps of
the fourth-order composition splitting):

* the original scheme with interface point values ``u_{i+1/2}`` and cell
  averages ``ubar_i``, updated by the closed-form evaluation of the traced
  piecewise-quadratic reconstruction
  ``q_i(z) = u_L (z-1)(2z-1) + (6 ubar - u_L - u_R) z(1-z) + u_R z(2z-1)``,
  restricted by |nu| <= 1;
* the discrepancy-distribution scheme on a pure point lattice (interfaces and
  cell centers interleaved), where a semi-Lagrangian predictor is followed by
  a conservation correction that distributes the per-cell discrepancy with
  weights alpha (center) and beta (interfaces), restricted by
  |eta| = 2|nu| <= 1.

All kernels operate on 1D slices or on 2D arrays along a chosen axis, with an
independent Courant number per slice.  The slice layout follows the grid
convention: ``iface[i]`` is the left interface of cell ``i`` for the original
scheme; for the point lattice, even indices are interfaces and odd indices are
cell centers.
"""

from __future__ import annotations

import numpy as np

from .errors import CFLError, ConfigError

_CFL_SLACK = 1e-12


def _coef(values, axis: int, ndim: int):
    """Broadcast a per-slice coefficient array across the advection axis."""
    arr = np.asarray(values, dtype=float)
    if arr.ndim == 0 or ndim == 1:
        return arr
    return np.expand_dims(arr, axis)


def check_courant(nu, bound: float, what: str = "advection step") -> None:
    worst = float(np.max(np.abs(nu)))
    if worst > bound + _CFL_SLACK:
        offender = int(np.argmax(np.abs(np.atleast_1d(nu))))
        raise CFLError(
            f"{what}: |Courant| = {worst:.6g} exceeds bound {bound} "
            f"(slice {offender})"
        )


def reconstruct_eval(u_left, u_avg, u_right, zeta):
    """Evaluate the cell reconstruction q(zeta) on [0, 1] from endpoint values
    and the cell average."""
    z = np.asarray(zeta, dtype=float)
    return (
        u_left * (z - 1.0) * (2.0 * z - 1.0)
        + (6.0 * u_avg - u_left - u_right) * z * (1.0 - z)
        + u_right * z * (2.0 * z - 1.0)
    )


def af_interface_update(iface, avg, nu, axis: int = 0):
    """Closed-form traced update of the interface values.

    Slice layout: ``iface[i]`` is the left interface of the cell whose average
    is ``avg[i]``.  Equivalent to evaluating the upwind cell's reconstruction
    at the foot point of the characteristic; exact at nu = 0 and |nu| = 1.
    """
    check_courant(nu, 1.0, "interface update")
    ndim = np.ndim(iface)
    nu_c = _coef(nu, axis, ndim)
    pos = nu_c >= 0.0
    m = np.abs(nu_c)
    up_iface = np.where(pos, np.roll(iface, 1, axis=axis), np.roll(iface, -1, axis=axis))
    up_avg = np.where(pos, np.roll(avg, 1, axis=axis), avg)
    return (
        m * (3.0 * m - 2.0) * up_iface
        + 6.0 * m * (1.0 - m) * up_avg
        + (1.0 - m) * (1.0 - 3.0 * m) * iface
    )


def af_average_update(iface, avg, nu, axis: int = 0):
    """Closed-form conservative update of the cell averages.

    Slice layout as in :func:`af_interface_update`.  Algebraically identical
    to the flux-difference form with Simpson-in-time fluxes built from the
    traced interface values at t^n, t^{n+1/2}, t^{n+1}.
    """
    check_courant(nu, 1.0, "average update")
    ndim = np.ndim(iface)
    nu_c = _coef(nu, axis, ndim)
    pos = nu_c >= 0.0
    m = np.abs(nu_c)
    far_iface = np.where(pos, np.roll(iface, 1, axis=axis), np.roll(iface, -2, axis=axis))
    up_avg = np.where(pos, np.roll(avg, 1, axis=axis), np.roll(avg, -1, axis=axis))
    up_iface = np.where(pos, iface, np.roll(iface, -1, axis=axis))
    down_iface = np.where(pos, np.roll(iface, -1, axis=axis), iface)
    one_m = 1.0 - m
    return (
        m * m * (m - 1.0) * far_iface
        + m * m * (3.0 - 2.0 * m) * up_avg
        + m * one_m * up_iface
        + one_m * one_m * (1.0 + 2.0 * m) * avg
        - m * one_m * one_m * down_iface
    )


def _dd_basis(xi):
    """Lagrange basis on the three-point cell stencil xi in {-1, 0, +1}."""
    left = 0.5 * xi * (xi - 1.0)
    center = 1.0 - xi * xi
    right = 0.5 * xi * (xi + 1.0)
    return left, center, right


def _parity_slices(axis: int, ndim: int):
    even = tuple(slice(0, None, 2) if ax == axis else slice(None) for ax in range(ndim))
    odd = tuple(slice(1, None, 2) if ax == axis else slice(None) for ax in range(ndim))
    return even, odd


def dd_predict(points, eta, axis: int = 0):
    """Semi-Lagrangian predictor: trace every lattice point through the local
    quadratic reconstruction on xi in [-1, 1]; interface points use the upwind
    cell chosen by the sign of the advection speed."""
    check_courant(eta, 1.0, "discrepancy predictor")
    ndim = np.ndim(points)
    # coefficients keep size 1 along the advection axis and broadcast against
    # both the full lattice and the even/odd sublattices
    eta_c = _coef(eta, axis, ndim)
    pos = eta_c >= 0.0

    pm1 = np.roll(points, 1, axis=axis)
    pp1 = np.roll(points, -1, axis=axis)

    out = np.empty_like(np.asarray(points, dtype=float))
    even, odd = _parity_slices(axis, ndim)

    # centers: the foot point xi = -eta stays inside the own cell for |eta| <= 1
    bl, bc, br = _dd_basis(-eta_c)
    out[odd] = bl * pm1[odd] + bc * points[odd] + br * pp1[odd]

    # interfaces: xi = 1 - eta in the left cell, or xi = -1 - eta in the right
    pm2 = np.roll(points, 2, axis=axis)
    pp2 = np.roll(points, -2, axis=axis)
    bl_p, bc_p, br_p = _dd_basis(1.0 - eta_c)
    from_left = bl_p * pm2[even] + bc_p * pm1[even] + br_p * points[even]
    bl_n, bc_n, br_n = _dd_basis(-1.0 - eta_c)
    from_right = bl_n * points[even] + bc_n * pp1[even] + br_n * pp2[even]
    out[even] = np.where(pos, from_left, from_right)
    return out


def dd_correct(points, predicted_half, predicted_full, eta, axis: int = 0,
               alpha: float = 1.0, beta: float = 1.0):
    """Distribute the per-cell conservation discrepancy onto the predictor.

    The discrepancy is the difference between the conservative flux-difference
    update of the Simpson cell average (with Simpson-in-time fluxes from the
    predicted interface values) and the Simpson average of the predictor
    output.  Under the constraint beta/3 + 2 alpha/3 = 1 the summed Simpson
    cell averages then satisfy the conservative update exactly.
    """
    ndim = np.ndim(points)
    even, odd = _parity_slices(axis, ndim)
    eta_b = _coef(eta, axis, ndim)

    ifc = points[even]
    cen = points[odd]
    avg_n = (ifc + 4.0 * cen + np.roll(ifc, -1, axis=axis)) / 6.0

    pf_ifc = predicted_full[even]
    pf_cen = predicted_full[odd]
    avg_star = (pf_ifc + 4.0 * pf_cen + np.roll(pf_ifc, -1, axis=axis)) / 6.0

    # (dt/dx) * F at each interface; the advection speed cancels against eta
    flux_sum = ifc + 4.0 * predicted_half[even] + pf_ifc
    delta = avg_n + (eta_b / 12.0) * (flux_sum - np.roll(flux_sum, -1, axis=axis)) - avg_star

    out = np.array(predicted_full, dtype=float, copy=True)
    out[odd] = pf_cen + alpha * delta
    out[even] = pf_ifc + beta * 0.5 * (np.roll(delta, 1, axis=axis) + delta)
    return out


def dd_step(points, eta, axis: int = 0, alpha: float = 1.0, beta: float = 1.0):
    """One full discrepancy-distribution update: predict to the half and full
    stages, then apply the conservation correction."""
    half = dd_predict(points, np.asarray(eta) * 0.5, axis=axis)
    full = dd_predict(points, eta, axis=axis)
    return dd_correct(points, half, full, eta, axis=axis, alpha=alpha, beta=beta)


def validate_distribution_params(alpha: float, beta: float) -> None:
    """Check the discrepancy weights constraint beta/3 + 2 alpha/3 = 1."""
    if abs(beta / 3.0 + 2.0 * alpha / 3.0 - 1.0) > 1e-12:
        raise ConfigError(
            f"discrepancy weights must satisfy beta/3 + 2*alpha/3 = 1, got "
            f"alpha={alpha}, beta={beta}"
        )


def dd_closed_form_interface(stencil, eta: float, beta: float = 1.0) -> float:
    """Printed closed-form interface update, kept as a cross-validation artifact.

    ``stencil`` holds the seven lattice values (u_{i-3/2}, u_{i-1}, u_{i-1/2},
    u_i, u_{i+1/2}, u_{i+1}, u_{i+3/2}) for a rightward speed; for a leftward
    speed pass the mirrored stencil and the magnitude of eta.  Matches the
    constructive path exactly.
    """
    u1, u2, u3, u4, u5, u6, u7 = stencil
    e = eta
    return (
        beta * e / 48.0 * (e - 2.0) * (2.0 * e - 1.0) * u1
        - beta * e / 12.0 * (e * e - 4.0 * e + 2.0) * u2
        + e / 48.0 * (2.0 * beta * e * e - 23.0 * beta * e + 14.0 * beta + 24.0 * e - 24.0) * u3
        + e / 6.0 * (3.0 * beta * e - 2.0 * beta - 6.0 * e + 12.0) * u4
        - (2.0 * beta * e**3 + 19.0 * beta * e * e - 14.0 * beta * e - 24.0 * e * e + 72.0 * e - 48.0) / 48.0 * u5
        + beta * e / 12.0 * (e * e + 2.0 * e - 2.0) * u6
        - beta * e / 48.0 * (2.0 * e * e + e - 2.0) * u7
    )


def dd_closed_form_center(stencil, eta: float, alpha: float = 1.0) -> float:
    """Printed closed-form center update, kept verbatim as a test artifact.

    ``stencil`` holds (u_{i-3/2}, u_{i-1}, u_{i-1/2}, u_i, u_{i+1/2}) for a
    rightward speed.  Note: this printed formula does not reduce to the
    identity at eta = 0 (its u_{i+1/2} coefficient carries a constant
    -alpha/2 term); the constructive path is the normative implementation.
    """
    u1, u2, u3, u4, u5 = stencil
    e = eta
    return (
        (alpha * e**3 + 2.0 * alpha * e * e - 2.0 * alpha * e - 6.0 * e * e + 6.0) / 6.0 * u4
        - (2.0 * alpha * e**3 + alpha * e * e - 2.0 * alpha * e - 12.0 * e * e + 12.0 * alpha) / 24.0 * u5
        - (3.0 * alpha * e * e - 2.0 * alpha * e - 2.0 * e * e - 2.0 * e) / 4.0 * u3
        - (alpha * e**3 - 4.0 * alpha * e * e + 2.0 * alpha * e) / 6.0 * u2
        + (2.0 * alpha * e**3 - 5.0 * alpha * e * e + 2.0 * alpha * e) / 24.0 * u1
    )
