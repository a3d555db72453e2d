"""Quantum scattering on an attractive Coulomb field: exact solution,
asymptotic splits, probability currents, partial-wave series, and the
long-wavelength black-hole analogue."""

from .asymptotic import (
    AsymptoticSplit,
    born_amplitude_yukawa,
    differential_cross_section,
    psi_asymptotic,
    psi_asymptotic_grid,
    rutherford_amplitude,
    rutherford_amplitude_phase_separated,
)
from .classical import (
    BlackHoleParams,
    coulomb_reduction,
    effective_potential,
    integrate_full_mode,
    long_wavelength_valid,
    radial_mode_asymptotic,
    radius_from_tortoise,
    tortoise_coordinate,
)
from .currents import (
    CurrentDecomposition,
    CurrentVector,
    current_decomposition_asymptotic,
    current_in_distorted,
    current_numeric,
    current_outgoing_exact,
    current_scattered_asymptotic,
    divergence_numeric,
    interference_radial_leading,
    oscillation_length,
)
from .exact import (
    FieldPoint,
    ScatteringParams,
    paraboloid_s,
    psi_exact,
    psi_exact_grid,
    psi_forward,
    psi_small_rhos,
    schrodinger_residual,
)
from .multipole import (
    CesaroState,
    PhaseShiftFactor,
    PlaneWavePartial,
    coulomb_wave_asymptotic,
    coulomb_wave_regular,
    f_closed_form,
    f_reduced_series,
    f_series_cesaro,
    f_series_partial_sum,
    f_series_partial_sweep,
    legendre_power_law_coeff,
    phase_shift,
    phase_shift_recurrence_check,
    phase_shift_sweep,
    plane_wave_partial,
    psi_multipole_sum,
)
from .specfun import (
    hyp1f1,
    hyp1f1_asymptotic,
    hyp1f1_series,
    legendre_p,
    legendre_sweep,
    log_gamma_complex,
    pochhammer,
    reciprocal_gamma,
    spherical_bessel_j,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticSplit",
    "BlackHoleParams",
    "CesaroState",
    "CurrentDecomposition",
    "CurrentVector",
    "FieldPoint",
    "PhaseShiftFactor",
    "PlaneWavePartial",
    "ScatteringParams",
    "born_amplitude_yukawa",
    "coulomb_reduction",
    "coulomb_wave_asymptotic",
    "coulomb_wave_regular",
    "current_decomposition_asymptotic",
    "current_in_distorted",
    "current_numeric",
    "current_outgoing_exact",
    "current_scattered_asymptotic",
    "differential_cross_section",
    "divergence_numeric",
    "effective_potential",
    "f_closed_form",
    "f_reduced_series",
    "f_series_cesaro",
    "f_series_partial_sum",
    "f_series_partial_sweep",
    "hyp1f1",
    "hyp1f1_asymptotic",
    "hyp1f1_series",
    "integrate_full_mode",
    "interference_radial_leading",
    "legendre_p",
    "legendre_power_law_coeff",
    "legendre_sweep",
    "log_gamma_complex",
    "long_wavelength_valid",
    "oscillation_length",
    "paraboloid_s",
    "phase_shift",
    "phase_shift_recurrence_check",
    "phase_shift_sweep",
    "plane_wave_partial",
    "pochhammer",
    "psi_asymptotic",
    "psi_asymptotic_grid",
    "psi_exact",
    "psi_exact_grid",
    "psi_forward",
    "psi_multipole_sum",
    "psi_small_rhos",
    "radial_mode_asymptotic",
    "radius_from_tortoise",
    "reciprocal_gamma",
    "schrodinger_residual",
    "spherical_bessel_j",
    "tortoise_coordinate",
]
