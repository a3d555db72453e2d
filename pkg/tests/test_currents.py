"""Probability-current tests: stencil machinery against analytic forms,
closure of the asymptotic decomposition, interference fringe geometry,
and conservation of the exact flow."""

import numpy as np
import pytest

from coulscat import (
    CurrentVector,
    FieldPoint,
    ScatteringParams,
    current_decomposition_asymptotic,
    current_in_distorted,
    current_numeric,
    current_outgoing_exact,
    current_scattered_asymptotic,
    divergence_numeric,
    interference_radial_leading,
    oscillation_length,
    psi_exact,
)
from coulscat.currents import current_exact_grid


def params(g, k=1.0):
    return ScatteringParams(gamma=g, k=k)


def test_current_vector_algebra():
    a = CurrentVector(3.0, 4.0)
    b = CurrentVector(1.0, -1.0)
    assert a.magnitude == pytest.approx(5.0)
    assert (a + b).j_r == 4.0
    assert (a - b).j_theta == 5.0


def test_plane_wave_current():
    # gamma = 0: J = k (cos theta, -sin theta) everywhere
    p = params(0.0, k=1.3)
    for rho, theta in [(7.0, 0.6), (22.0, 2.4)]:
        j = current_numeric(lambda q: psi_exact(p, q), p,
                            FieldPoint(rho=rho, theta=theta))
        assert abs(j.j_r - p.k * np.cos(theta)) < 1e-5
        assert abs(j.j_theta + p.k * np.sin(theta)) < 1e-5


def test_distorted_incoming_current_matches_stencil():
    p = params(0.4)
    pt = FieldPoint(rho=20.0, theta=1.0)
    analytic = current_in_distorted(p, pt)

    from coulscat.asymptotic import psi_asymptotic_grid

    def field(q):
        pin, _, _ = psi_asymptotic_grid(p, q.rho, q.theta, backreaction=False)
        return complex(pin)

    numeric = current_numeric(field, p, pt)
    assert abs(numeric.j_r - analytic.j_r) < 1e-6
    assert abs(numeric.j_theta - analytic.j_theta) < 1e-6


def test_scattered_current_matches_stencil():
    p = params(0.6)
    pt = FieldPoint(rho=30.0, theta=2.2)
    analytic = current_scattered_asymptotic(p, pt)

    from coulscat.asymptotic import psi_asymptotic_grid

    def field(q):
        _, pscat, _ = psi_asymptotic_grid(p, q.rho, q.theta)
        return complex(pscat)

    numeric = current_numeric(field, p, pt)
    assert abs(numeric.j_r - analytic.j_r) < 5e-6
    assert analytic.j_theta == 0.0
    assert abs(numeric.j_theta) < 5e-6


def test_scattered_current_radial_form():
    # J_r = k gamma^2 / (4 rho^2 sin^4(theta/2)), purely radial and positive
    p = params(0.8, k=2.0)
    pt = FieldPoint(rho=25.0, theta=1.7)
    j = current_scattered_asymptotic(p, pt)
    ref = p.k * p.gamma ** 2 / (4.0 * pt.rho ** 2 * np.sin(pt.theta / 2) ** 4)
    assert j.j_r == pytest.approx(ref, rel=1e-14)


def test_decomposition_closure():
    p = params(0.4)
    for rho, theta in [(50.0, 1.2), (120.0, 2.6)]:
        dec = current_decomposition_asymptotic(p, FieldPoint(rho=rho,
                                                             theta=theta))
        resid_r = dec.total.j_r - (dec.incoming.j_r + dec.scattered.j_r
                                   + dec.interference.j_r)
        resid_t = dec.total.j_theta - (dec.incoming.j_theta
                                       + dec.scattered.j_theta
                                       + dec.interference.j_theta)
        assert abs(resid_r) < 1e-10
        assert abs(resid_t) < 1e-10


def test_interference_vanishes_without_coupling():
    p = params(0.0)
    dec = current_decomposition_asymptotic(p, FieldPoint(rho=40.0, theta=1.0))
    assert abs(dec.interference.j_r) < 1e-9
    assert abs(dec.interference.j_theta) < 1e-9


def test_interference_leading_form():
    # far out the measured interference current follows the cosine form
    p = params(0.4)
    for rho in (300.0, 800.0):
        pt = FieldPoint(rho=rho, theta=1.1)
        dec = current_decomposition_asymptotic(p, pt)
        lead = interference_radial_leading(p, pt)
        scale = abs(p.gamma * p.k / rho) * (
            np.cos(pt.theta / 2) / np.sin(pt.theta / 2)) ** 2
        assert abs(dec.interference.j_r - lead) < 0.05 * scale, rho


def test_outgoing_current_neutral_limit():
    p = params(0.0)
    j = current_outgoing_exact(p, FieldPoint(rho=60.0, theta=2.0))
    assert abs(j.j_r) < 1e-7
    assert abs(j.j_theta) < 1e-7


def test_outgoing_current_approaches_scattered():
    p = params(0.5)
    pt = FieldPoint(rho=100.0, theta=np.pi / 2)
    out = current_outgoing_exact(p, pt)
    scat = current_scattered_asymptotic(p, pt)
    assert abs(out.j_r - scat.j_r) < 0.1 * scat.j_r


def test_interference_averages_out():
    # averaged over one fringe in angle at fixed radius the interference
    # current is much smaller than its local peak
    p = params(0.4)
    theta0 = 1.3
    rho = 100.0
    pt0 = FieldPoint(rho=rho, theta=theta0)
    dtheta = oscillation_length(p, pt0) * p.k / rho  # one fringe in angle
    thetas = np.linspace(theta0 - dtheta / 2, theta0 + dtheta / 2, 65)
    vals = np.array([
        current_decomposition_asymptotic(p, FieldPoint(rho=rho, theta=t))
        .interference.j_r for t in thetas])
    mean = np.trapezoid(vals, thetas) / dtheta
    assert abs(mean) * 5.0 < np.max(np.abs(vals))


def test_oscillation_length_neutral_limit():
    # gamma -> 0: plain 2 pi / (k sin theta)
    pt = FieldPoint(rho=50.0, theta=1.0)
    got = oscillation_length(params(1e-12, k=2.0), pt)
    assert got == pytest.approx(2 * np.pi / (2.0 * np.sin(1.0)), rel=1e-9)


def test_oscillation_length_errors():
    p = params(1.0)
    with pytest.raises(ValueError):
        oscillation_length(p, FieldPoint(rho=50.0, theta=0.0))
    # rho*s = 2 gamma exactly: stationary fringe, no finite spacing
    theta = 2.0
    rho = 2.0 * p.gamma / (1.0 - np.cos(theta))
    with pytest.raises(ValueError):
        oscillation_length(p, FieldPoint(rho=rho, theta=theta))


def test_exact_flow_is_divergence_free():
    p = params(0.4)
    for rho, theta in [(8.0, 1.2), (25.0, 2.1)]:
        pt = FieldPoint(rho=rho, theta=theta)
        div = divergence_numeric(lambda q: psi_exact(p, q), p, pt)
        j = current_numeric(lambda q: psi_exact(p, q), p, pt)
        scale = j.magnitude / rho
        assert abs(div) < 1e-3 * scale, (rho, theta)


def test_step_validation():
    p = params(0.5)
    pt = FieldPoint(rho=10.0, theta=1.0)
    with pytest.raises(ValueError):
        current_numeric(lambda q: psi_exact(p, q), p, pt, h=0.0)
    with pytest.raises(ValueError):
        current_numeric(lambda q: psi_exact(p, q), p, pt, h=5.0)


def test_grid_current_matches_pointwise():
    p = params(0.7)
    rho = np.array([15.0, 15.0, 40.0])
    theta = np.array([0.8, 2.0, 1.1])
    h = 1e-4 * 40.0
    jr, jt = current_exact_grid(p, rho, theta, h=h)
    for i in range(3):
        j = current_numeric(lambda q: psi_exact(p, q), p,
                            FieldPoint(rho=rho[i], theta=theta[i]), h=h)
        assert abs(jr[i] - j.j_r) < 1e-12
        assert abs(jt[i] - j.j_theta) < 1e-12


def test_incoming_current_near_axis():
    # approaching the axis the radial incoming flux tends to k(1 + gamma/rho)
    p = params(0.9)
    rho = 30.0
    analytic = current_in_distorted(p, FieldPoint(rho=rho, theta=1e-6))
    expected_r = p.k * (1.0 + p.gamma / rho)
    assert analytic.j_r == pytest.approx(expected_r, rel=1e-9)
    with pytest.raises(ValueError):
        current_in_distorted(p, FieldPoint(rho=rho, theta=0.0))
