"""Large-(rho s) asymptotics: distorted incoming plane wave, scattered
spherical wave, scattering amplitudes, Rutherford and Born/Yukawa
cross-sections.

The split into incoming plus scattered exists only away from the forward
axis; requesting it at theta = 0 raises, because there the decomposition
genuinely does not exist (the exact solution stays finite while this
approximate form diverges).
"""

from dataclasses import dataclass

import numpy as np

from . import specfun

# rho*s above which the split is flagged as trustworthy; the literature
# only requires rho*s >> 1, the constant is a library default.
VALIDITY_RHO_S = 10.0


@dataclass(frozen=True)
class AsymptoticSplit:
    """Incoming and scattered pieces of the large-(rho s) solution.
    Fields may hold scalars or arrays; total is their sum by construction."""
    psi_in: complex
    psi_scat: complex
    valid: bool

    @property
    def total(self):
        return self.psi_in + self.psi_scat


def _gamma_phase_ratio(g):
    """Gamma(1+i g)/Gamma(1-i g), the unit-modulus phase of the amplitude."""
    return np.exp(specfun.log_gamma_complex(1.0 + 1j * g)
                  - specfun.log_gamma_complex(1.0 - 1j * g))


def psi_asymptotic_grid(p, rho, theta, backreaction=True):
    """Asymptotic split on broadcastable arrays; see psi_asymptotic."""
    rho = np.asarray(rho, dtype=np.float64)
    theta = np.asarray(theta, dtype=np.float64)
    if np.any(theta <= 0.0):
        raise ValueError("the asymptotic split does not exist at theta = 0")
    s = 1.0 - np.cos(theta)
    rs = rho * s
    if np.any(rs <= 0.0):
        raise ValueError("requires rho*s > 0")
    g = p.gamma
    log_rs = np.log(rs)
    psi_in = np.exp(1j * (rho * (1.0 - s) + g * log_rs))
    if backreaction:
        psi_in = psi_in * (1.0 - 1j * g ** 2 / rs)
    psi_scat = (-g / rs) * _gamma_phase_ratio(g) * np.exp(1j * (rho - g * log_rs))
    valid = rs > VALIDITY_RHO_S
    return psi_in, psi_scat, valid


def psi_asymptotic(p, pt, backreaction=True):
    """Distorted incoming plane wave plus distorted spherical wave.

    With backreaction on, the incoming wave carries the (1 - i gamma^2/rho s)
    amplitude correction; off, it is the phase-distorted wave alone.
    """
    pin, pscat, valid = psi_asymptotic_grid(p, pt.rho, pt.theta,
                                            backreaction=backreaction)
    return AsymptoticSplit(complex(pin), complex(pscat), bool(valid))


def rutherford_amplitude(p, theta):
    """Scattering amplitude multiplying the distorted spherical wave:
    -gamma/(2 k sin^2(theta/2)) times the unit-modulus Gamma phase ratio."""
    theta_arr = np.asarray(theta, dtype=np.float64)
    if np.any(theta_arr <= 0.0) or np.any(theta_arr > np.pi):
        raise ValueError("theta must lie in (0, pi]")
    g, k = p.gamma, p.k
    out = -g / (2.0 * k * np.sin(theta_arr / 2.0) ** 2) * _gamma_phase_ratio(g)
    return complex(out) if theta_arr.ndim == 0 else out


def rutherford_amplitude_phase_separated(p, theta):
    """The amplitude with the angle-dependent logarithmic phase factored in
    explicitly: f = f_R * e^{-i gamma ln(s/2)}. Same modulus as f_R."""
    theta_arr = np.asarray(theta, dtype=np.float64)
    s = 1.0 - np.cos(theta_arr)
    if np.any(s <= 0.0):
        raise ValueError("theta must lie in (0, pi]")
    out = rutherford_amplitude(p, theta) * np.exp(-1j * p.gamma * np.log(s / 2.0))
    return complex(out) if theta_arr.ndim == 0 else out


def differential_cross_section(p, theta):
    """dSigma/dOmega = gamma^2 / (4 k^2 sin^4(theta/2)), diverging as
    theta^-4 toward the forward axis (hence theta = 0 is a domain error:
    the large-distance amplitude picture breaks down there)."""
    theta_arr = np.asarray(theta, dtype=np.float64)
    if np.any(theta_arr <= 0.0) or np.any(theta_arr > np.pi):
        raise ValueError("theta must lie in (0, pi]: the cross-section "
                         "diverges on the forward axis")
    out = p.gamma ** 2 / (4.0 * p.k ** 2 * np.sin(theta_arr / 2.0) ** 4)
    return float(out) if theta_arr.ndim == 0 else out


def born_amplitude_yukawa(p, theta, mu):
    """First Born approximation for the screened potential (A/r) e^{-mu r}:
    f_B = -2 gamma k / (q^2 + mu^2) with momentum transfer q = 2 k
    sin(theta/2). mu = 0 recovers the plain Rutherford modulus."""
    if mu < 0:
        raise ValueError("screening mass mu must be >= 0")
    theta_arr = np.asarray(theta, dtype=np.float64)
    if np.any(theta_arr < 0.0) or np.any(theta_arr > np.pi):
        raise ValueError("theta must lie in [0, pi]")
    q = 2.0 * p.k * np.sin(theta_arr / 2.0)
    denom = q ** 2 + mu ** 2
    if np.any(denom == 0.0):
        raise ValueError("Born amplitude diverges at theta = 0 with mu = 0")
    out = -2.0 * p.gamma * p.k / denom + 0j
    return complex(out) if theta_arr.ndim == 0 else out
