"""Black-hole long-wavelength layer: parameter mapping, effective barrier,
tortoise coordinate, validity gating, and the full-equation integrator used
to audit the dropped short-range term."""

import numpy as np
import pytest

from coulscat import (
    BlackHoleParams,
    ScatteringParams,
    coulomb_reduction,
    coulomb_wave_regular,
    effective_potential,
    differential_cross_section,
    integrate_full_mode,
    long_wavelength_valid,
    plane_wave_partial,
    radial_mode_asymptotic,
    radius_from_tortoise,
    tortoise_coordinate,
)


def test_params_validation():
    bh = BlackHoleParams(mass=1.0, omega=0.2)
    assert bh.r_s == 2.0
    assert bh.gamma == -0.4
    with pytest.raises(ValueError):
        BlackHoleParams(mass=-1.0, omega=0.2)
    with pytest.raises(ValueError):
        BlackHoleParams(mass=1.0, omega=0.0)


def test_coulomb_reduction_mapping():
    bh = BlackHoleParams(mass=1.0, omega=0.2)
    p = coulomb_reduction(bh)
    assert p.gamma == -0.4
    assert p.k == 0.2
    # massless limit: free propagation
    assert coulomb_reduction(BlackHoleParams(mass=0.0, omega=1.0)).gamma == 0.0


def test_effective_potential_value():
    bh = BlackHoleParams(mass=1.0, omega=0.3)
    # (1/100)(1 - 0.2)(0.2 + 6) = 0.0496
    assert effective_potential(bh, 2, 10.0) == pytest.approx(0.0496)
    arr = effective_potential(bh, 2, np.array([10.0, 20.0]))
    assert arr[0] == pytest.approx(0.0496)
    with pytest.raises(ValueError):
        effective_potential(bh, 2, 2.0)  # on the horizon
    with pytest.raises(ValueError):
        effective_potential(bh, -1, 10.0)


def test_effective_potential_barrier_shape():
    # vanishes at the horizon and at infinity, with a single hump between
    bh = BlackHoleParams(mass=1.0, omega=0.3)
    r = np.geomspace(2.0001, 2000.0, 400)
    v = effective_potential(bh, 2, r)
    assert v[0] < 1e-3
    assert v[-1] < 1e-5
    peak = np.argmax(v)
    assert 0 < peak < len(r) - 1
    assert np.all(np.diff(v[: peak + 1]) > 0)
    assert np.all(np.diff(v[peak:]) < 0)


def test_tortoise_coordinate():
    bh = BlackHoleParams(mass=1.0, omega=0.3)
    # at r = 2 r_s the log vanishes: r_* = r
    assert tortoise_coordinate(bh, 2.0 * bh.r_s) == pytest.approx(2.0 * bh.r_s)
    # diverges toward the horizon
    assert tortoise_coordinate(bh, bh.r_s * 1.0001) < -10.0
    with pytest.raises(ValueError):
        tortoise_coordinate(bh, bh.r_s)
    # flat space: identity
    flat = BlackHoleParams(mass=0.0, omega=1.0)
    assert tortoise_coordinate(flat, 7.3) == 7.3
    assert radius_from_tortoise(flat, 7.3) == 7.3


def test_tortoise_round_trip():
    bh = BlackHoleParams(mass=0.7, omega=0.3)
    r = np.geomspace(1.01 * bh.r_s, 1000.0 * bh.r_s, 60)
    for ri in r:
        back = radius_from_tortoise(bh, tortoise_coordinate(bh, ri))
        assert abs(back - ri) < 1e-10 * ri


def test_long_wavelength_validity():
    bh = BlackHoleParams(mass=1.0, omega=0.2)
    assert long_wavelength_valid(bh, 1)
    assert long_wavelength_valid(bh, 5)
    # strong coupling M omega = 1: ell(ell+1) must exceed 12
    strong = BlackHoleParams(mass=1.0, omega=1.0)
    assert not long_wavelength_valid(strong, 3)
    assert long_wavelength_valid(strong, 4)
    with pytest.raises(ValueError):
        long_wavelength_valid(bh, 0)


def test_dropped_term_subdominant_where_valid():
    # the mapping drops 12 M^2 w^2 / r^2 against ell(ell+1)/r^2; whenever
    # the validity gate opens, the kept term really does dominate
    for m, w, ell in [(1.0, 0.2, 1), (1.0, 1.0, 4), (0.05, 1.0, 2)]:
        bh = BlackHoleParams(mass=m, omega=w)
        assert long_wavelength_valid(bh, ell)
        assert ell * (ell + 1) > 12.0 * (m * w) ** 2


def test_cross_section_even_in_coupling_sign():
    # |f|^2 only sees gamma^2: attractive and repulsive scatterers give the
    # same Rutherford distribution
    for theta in (0.5, 1.5, 3.0):
        plus = differential_cross_section(
            ScatteringParams(gamma=0.4, k=1.0), theta)
        minus = differential_cross_section(
            ScatteringParams(gamma=-0.4, k=1.0), theta)
        assert plus == pytest.approx(minus, rel=1e-13)


def test_radial_mode_asymptotic_free_limit():
    # mass = 0 reduces to the plane-wave two-exponential partial wave
    bh = BlackHoleParams(mass=0.0, omega=1.0)
    got = radial_mode_asymptotic(bh, 2, 70.0)
    ref = plane_wave_partial(2, 70.0).asymptotic
    assert abs(got - ref) < 1e-12 * abs(ref)


def test_radial_mode_asymptotic_validity_errors():
    strong = BlackHoleParams(mass=1.0, omega=1.0)
    with pytest.raises(ValueError):
        radial_mode_asymptotic(strong, 2, 1000.0)  # mapping uncontrolled
    weak = BlackHoleParams(mass=0.05, omega=1.0)
    with pytest.raises(ValueError):
        radial_mode_asymptotic(weak, 2, 10.0)  # not asymptotic yet


def test_radial_mode_asymptotic_matches_coulomb_wave():
    bh = BlackHoleParams(mass=0.05, omega=1.0)
    p = coulomb_reduction(bh)
    r = 500.0
    got = radial_mode_asymptotic(bh, 2, r)
    ref = coulomb_wave_regular(2, p.gamma, p.k * r) / (p.k * r)
    assert abs(got - ref) < 1e-2 * abs(ref)


def test_integrator_validation():
    bh = BlackHoleParams(mass=0.05, omega=1.0)
    with pytest.raises(ValueError):
        integrate_full_mode(bh, -1, 100.0)
    with pytest.raises(ValueError):
        integrate_full_mode(bh, 2, 0.5, r_start=1.0)
    with pytest.raises(ValueError):
        integrate_full_mode(bh, 2, 100.0, r_start=0.05)
    with pytest.raises(ValueError):
        integrate_full_mode(bh, 2, 100.0, r_start=1.0,
                            r_eval=np.array([0.5, 50.0]))


def test_integrator_tracks_coulomb_mode():
    # the dropped short-range term only matters near the hole; starting
    # from shared initial data the two solutions stay close far out
    bh = BlackHoleParams(mass=0.05, omega=1.0)
    p = coulomb_reduction(bh)
    r_end = 500.0
    full = integrate_full_mode(bh, 2, r_end)
    coul = coulomb_wave_regular(2, p.gamma, p.k * r_end)
    assert abs(full - coul) < 1e-2 * abs(coul)


def test_integrator_r_eval_array():
    bh = BlackHoleParams(mass=0.05, omega=1.0)
    rs = np.array([50.0, 120.0, 300.0])
    vals = integrate_full_mode(bh, 2, 300.0, r_eval=rs)
    assert vals.shape == (3,)
    assert np.iscomplexobj(vals)
    # endpoint value consistent with the scalar call
    end = integrate_full_mode(bh, 2, 300.0)
    assert abs(vals[-1] - end) < 1e-9 * abs(end)


def test_integrator_free_limit_is_bessel():
    # mass = 0: the full equation is the free radial equation, and the
    # integrated mode must agree with the Bessel form downstream
    bh = BlackHoleParams(mass=0.0, omega=1.0)
    r_end = 80.0
    got = integrate_full_mode(bh, 2, r_end, r_start=5.0)
    ref = coulomb_wave_regular(2, 0.0, r_end)
    assert abs(got - ref) < 1e-6 * abs(ref)


def test_flat_spacetime_mode_is_plane_wave_mode():
    # with mass exactly zero the asymptotic radial mode agrees with the
    # exact free partial wave to the usual 1/rho accuracy
    bh = BlackHoleParams(mass=0.0, omega=1.0)
    r = 200.0
    asym = radial_mode_asymptotic(bh, 1, r)
    exact = plane_wave_partial(1, r).exact
    assert abs(asym - exact) < 2e-2 / r
