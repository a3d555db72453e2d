"""Probability currents of the scattering solution.

All currents are computed from fields via J = Im[psi* grad psi] with the
gradient taken in physical units, grad = (k d/d_rho, (k/rho) d/d_theta), so
the numbers carry one power of k relative to the dimensionless field. The
numeric routines use central differences with an angular step shrunk by
1/max(1, rho) so that the physical arc length stays comparable to the
radial step.
"""

from dataclasses import dataclass

import numpy as np

from . import asymptotic, exact, specfun


@dataclass(frozen=True)
class CurrentVector:
    """Radial and polar components of a probability current."""
    j_r: float
    j_theta: float

    def __add__(self, other):
        return CurrentVector(self.j_r + other.j_r, self.j_theta + other.j_theta)

    def __sub__(self, other):
        return CurrentVector(self.j_r - other.j_r, self.j_theta - other.j_theta)

    @property
    def magnitude(self):
        return float(np.hypot(self.j_r, self.j_theta))


@dataclass(frozen=True)
class CurrentDecomposition:
    """Total current of the asymptotic field and its three pieces: the
    currents of the incoming and scattered waves alone, plus the cross
    (interference) contribution defined as total minus the two."""
    total: CurrentVector
    incoming: CurrentVector
    scattered: CurrentVector
    interference: CurrentVector


def _default_step(rho):
    return 1e-4 * max(1.0, rho)


def _check_step(p, rho, h):
    if h <= 0.0:
        raise ValueError("step h must be positive")
    if rho <= h:
        raise ValueError("need rho > h")
    if h * max(1.0, abs(p.gamma) / rho) >= 0.1:
        raise ValueError("step h too coarse for this field point")


def _stencil_current(grid_field, k, rho, theta, h):
    """Current from central differences of a vectorized field.

    grid_field(rho_array, theta_array) -> complex array. The polar step is
    h/max(1, rho) so the arc displacement rho*dtheta matches h. Returns
    (j_r, j_theta) arrays broadcast over rho, theta.
    """
    rho = np.asarray(rho, dtype=np.float64)
    theta = np.asarray(theta, dtype=np.float64)
    ht = h / np.maximum(1.0, rho)
    rho_b, theta_b = np.broadcast_arrays(rho, theta)
    ht_b = np.broadcast_to(ht, rho_b.shape)
    pts_rho = np.stack([rho_b, rho_b + h, rho_b - h, rho_b, rho_b])
    pts_theta = np.stack([theta_b, theta_b, theta_b,
                          theta_b + ht_b, theta_b - ht_b])
    vals = grid_field(pts_rho, pts_theta)
    psi_c = vals[0]
    d_rho = (vals[1] - vals[2]) / (2.0 * h)
    d_theta = (vals[3] - vals[4]) / (2.0 * ht_b)
    j_r = k * np.imag(np.conj(psi_c) * d_rho)
    j_theta = (k / rho_b) * np.imag(np.conj(psi_c) * d_theta)
    return j_r, j_theta


def current_numeric(field, p, pt, h=None):
    """Numerical current of an arbitrary scalar field at one point.

    field maps a FieldPoint to a complex value. Both components use the
    same five-point cross stencil as the residual check.
    """
    if h is None:
        h = _default_step(pt.rho)
    _check_step(p, pt.rho, h)

    def grid(rho_a, theta_a):
        flat_r = rho_a.ravel()
        flat_t = theta_a.ravel()
        out = np.array([field(exact.FieldPoint(r, t))
                        for r, t in zip(flat_r, flat_t)], dtype=np.complex128)
        return out.reshape(rho_a.shape)

    j_r, j_theta = _stencil_current(grid, p.k, pt.rho, pt.theta, h)
    return CurrentVector(float(j_r), float(j_theta))


def current_exact_grid(p, rho, theta, h=None):
    """Vectorized numeric current of the exact solution over a grid.
    Returns (j_r, j_theta) arrays. Used by scans and the acceptance suite,
    where point-by-point stencils would be too slow."""
    rho = np.asarray(rho, dtype=np.float64)
    if h is None:
        h = _default_step(float(np.max(rho)))
    _check_step(p, float(np.min(rho)), h)

    def grid(rho_a, theta_a):
        return exact.psi_exact_grid(p, rho_a, theta_a)

    return _stencil_current(grid, p.k, rho, theta, h)


def current_asymptotic_grid(p, rho, theta, backreaction=False, h=None):
    """Vectorized numeric current of the asymptotic total field."""
    rho = np.asarray(rho, dtype=np.float64)
    if h is None:
        h = _default_step(float(np.max(rho)))
    _check_step(p, float(np.min(rho)), h)

    def grid(rho_a, theta_a):
        pin, pscat, _ = asymptotic.psi_asymptotic_grid(
            p, rho_a, theta_a, backreaction=backreaction)
        return pin + pscat

    return _stencil_current(grid, p.k, rho, theta, h)


def current_asymptotic_split_grid(p, rho, theta, backreaction=False, h=None):
    """Vectorized numeric currents of the asymptotic total field and of its
    incoming and scattered pieces separately. Returns six arrays:
    (j_r_total, j_theta_total, j_r_in, j_theta_in, j_r_scat, j_theta_scat).
    The interference current is total minus the two, taken by the caller."""
    rho = np.asarray(rho, dtype=np.float64)
    if h is None:
        h = _default_step(float(np.max(rho)))
    _check_step(p, float(np.min(rho)), h)

    def grid_total(rho_a, theta_a):
        pin, pscat, _ = asymptotic.psi_asymptotic_grid(
            p, rho_a, theta_a, backreaction=backreaction)
        return pin + pscat

    def grid_in(rho_a, theta_a):
        return asymptotic.psi_asymptotic_grid(
            p, rho_a, theta_a, backreaction=backreaction)[0]

    def grid_scat(rho_a, theta_a):
        return asymptotic.psi_asymptotic_grid(
            p, rho_a, theta_a, backreaction=backreaction)[1]

    jr_t, jt_t = _stencil_current(grid_total, p.k, rho, theta, h)
    jr_i, jt_i = _stencil_current(grid_in, p.k, rho, theta, h)
    jr_s, jt_s = _stencil_current(grid_scat, p.k, rho, theta, h)
    return jr_t, jt_t, jr_i, jt_i, jr_s, jt_s


def current_outgoing_grid(p, rho, theta, subtract_backreaction=True, h=None):
    """Vectorized numeric current of (exact minus distorted incoming)."""
    rho = np.asarray(rho, dtype=np.float64)
    if h is None:
        h = _default_step(float(np.max(rho)))
    _check_step(p, float(np.min(rho)), h)

    def grid(rho_a, theta_a):
        pin, _, _ = asymptotic.psi_asymptotic_grid(
            p, rho_a, theta_a, backreaction=subtract_backreaction)
        return exact.psi_exact_grid(p, rho_a, theta_a) - pin

    return _stencil_current(grid, p.k, rho, theta, h)


def current_in_distorted(p, pt):
    """Closed-form current of the phase-distorted incoming wave (no
    backreaction): radially k(cos theta + gamma/rho), polar component
    -k(sin theta - (gamma/rho) sin theta/(1 - cos theta))."""
    jr, jt = current_in_distorted_grid(p, pt.rho, pt.theta)
    return CurrentVector(float(jr), float(jt))


def current_in_distorted_grid(p, rho, theta):
    rho = np.asarray(rho, dtype=np.float64)
    theta = np.asarray(theta, dtype=np.float64)
    s = 1.0 - np.cos(theta)
    if np.any(s <= 0.0) or np.any(theta > np.pi):
        raise ValueError("theta must lie in (0, pi]")
    g, k = p.gamma, p.k
    j_r = k * (np.cos(theta) + g / rho)
    j_theta = -k * (np.sin(theta) - (g / rho) * np.sin(theta) / s)
    return j_r, j_theta


def current_scattered_asymptotic(p, pt):
    """Current of the scattered spherical wave alone: purely radial,
    k gamma^2 / (4 rho^2 sin^4(theta/2))."""
    s = pt.s
    if s <= 0.0:
        raise ValueError("theta must lie in (0, pi]")
    g, k = p.gamma, p.k
    j_r = k * g ** 2 / (4.0 * pt.rho ** 2 * np.sin(pt.theta / 2.0) ** 4)
    return CurrentVector(float(j_r), 0.0)


def current_decomposition_asymptotic(p, pt, h=None, backreaction=False):
    """Split the current of the asymptotic field into incoming, scattered
    and interference parts, all by the same numeric stencil.

    Backreaction defaults to off here: the closed-form incoming current
    above belongs to the purely phase-distorted wave, and the decomposition
    is normally compared against it.
    """
    if h is None:
        h = _default_step(pt.rho)
    _check_step(p, pt.rho, h)

    def make(field):
        return current_numeric(field, p, pt, h=h)

    def f_total(q):
        sp = asymptotic.psi_asymptotic(p, q, backreaction=backreaction)
        return sp.total

    def f_in(q):
        return asymptotic.psi_asymptotic(p, q, backreaction=backreaction).psi_in

    def f_scat(q):
        return asymptotic.psi_asymptotic(p, q, backreaction=backreaction).psi_scat

    total = make(f_total)
    incoming = make(f_in)
    scattered = make(f_scat)
    return CurrentDecomposition(total, incoming, scattered,
                                total - incoming - scattered)


def current_outgoing_exact(p, pt, subtract_backreaction=True, h=None):
    """Current of the exact field minus the distorted incoming wave.

    With subtract_backreaction the amplitude-corrected incoming wave is
    removed, which suppresses the spurious oscillations left behind when
    only the phase-distorted wave is subtracted.
    """
    def f_out(q):
        pin, _, _ = asymptotic.psi_asymptotic_grid(
            p, q.rho, q.theta, backreaction=subtract_backreaction)
        return exact.psi_exact(p, q) - complex(pin)

    return current_numeric(f_out, p, pt, h=h)


def interference_radial_leading(p, pt):
    """Leading large-(rho s) form of the radial interference current:
    -(gamma k/rho) cot^2(theta/2) cos(rho s - 2 gamma ln(rho s) + 2 delta_0)
    with delta_0 = arg Gamma(1 + i gamma)."""
    s = pt.s
    if s <= 0.0 or pt.theta > np.pi:
        raise ValueError("theta must lie in (0, pi]")
    g, k = p.gamma, p.k
    rs = pt.rho * s
    delta0 = specfun.log_gamma_complex(1.0 + 1j * g).imag
    delta0 = (delta0 + np.pi) % (2.0 * np.pi) - np.pi
    phase = rs - 2.0 * g * np.log(rs) + 2.0 * delta0
    cot_half = np.cos(pt.theta / 2.0) / np.sin(pt.theta / 2.0)
    return float(-(g * k / pt.rho) * cot_half ** 2 * np.cos(phase))


def oscillation_length(p, pt):
    """Radial period of the incoming/scattered interference fringes,
    2 pi / (k sin(theta) (1 - 2 gamma/(rho s))). The stationary
    configuration rho s = 2 gamma has no finite fringe spacing."""
    if not (0.0 < pt.theta < np.pi):
        raise ValueError("theta must lie strictly inside (0, pi)")
    rs = pt.rho * pt.s
    factor = 1.0 - 2.0 * p.gamma / rs
    if abs(factor) < 1e-12:
        raise ValueError("fringe spacing is singular where rho s equals "
                         "2 gamma")
    return float(2.0 * np.pi / (p.k * np.sin(pt.theta) * factor))


def divergence_numeric(field, p, pt, h=None):
    """Numeric divergence of the current of a field, in spherical
    coordinates: k [ rho^-2 d(rho^2 J_r)/d_rho
    + (rho sin theta)^-1 d(sin theta J_theta)/d_theta ].

    Stationary solutions should give values near zero; the scale to compare
    against is |J| / rho.
    """
    if h is None:
        h = _default_step(pt.rho)
    _check_step(p, pt.rho, h)
    # outer step for differentiating J itself; the inner stencil reuses h
    hd = 10.0 * h
    ht = hd / max(1.0, pt.rho)
    rho, theta = pt.rho, pt.theta

    def jvec(r, t):
        return current_numeric(field, p, exact.FieldPoint(r, t), h=h)

    jr_p = jvec(rho + hd, theta).j_r
    jr_m = jvec(rho - hd, theta).j_r
    jt_p = jvec(rho, theta + ht).j_theta
    jt_m = jvec(rho, theta - ht).j_theta
    d_r = ((rho + hd) ** 2 * jr_p - (rho - hd) ** 2 * jr_m) / (2.0 * hd)
    d_t = (np.sin(theta + ht) * jt_p - np.sin(theta - ht) * jt_m) / (2.0 * ht)
    return float(p.k * (d_r / rho ** 2 + d_t / (rho * np.sin(theta))))
