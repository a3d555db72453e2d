"""Command-line front end: CSV datasets for every figure-style scan.

Usage:
    scatter <quantity> [flags]
    scatter describe <quantity>
    scatter <quantity> --preset figK [flag overrides]

One CSV goes to --out (default <quantity>.csv), one row per grid point,
with a header naming every column. Output is deterministic: grids are
generated from the ScanSpec alone, rows are computed in fixed 2048-row chunks
whose boundaries do not depend on the worker count, and floats are written
with 17 significant digits. SCATTER_THREADS caps the number of worker
threads (the default is the machine's CPU count).

Exit codes: 0 success, 2 invalid scan spec or arguments, 3 numerical failure.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields
from importlib import resources

import numpy as np

from . import asymptotic, classical, currents, exact, multipole, specfun

CHUNK_ROWS = 2048

QUANTITIES = ("psi_exact", "psi_asymptotic", "currents", "cross_section",
              "cesaro", "reduced_series", "diverging_sum", "field_map",
              "bh_mode")

PRESETS = ("fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7")


@dataclass
class ScanSpec:
    """Everything a scan needs: the quantity, physical parameters, grid
    ranges (each a (start, stop, count) triple), and option flags. Unused
    fields stay None and are ignored by the builder for that quantity."""
    quantity: str
    gamma: float = 1.0
    k: float = 1.0
    mass: float = None
    omega: float = None
    mu: float = 0.0
    ell: int = 2
    ell_max: int = 1000
    ell_max_values: list = None
    cesaro_n: int = 1000
    cesaro_n_values: list = None
    fixed_theta: float = 2.0
    rho_values: list = None
    theta_range: tuple = None
    theta_log: bool = False
    kx_values: list = None
    kx_range: tuple = None
    kz_range: tuple = None
    r_range: tuple = None
    backreaction: bool = False
    with_asymptotic: bool = False
    acknowledge_classical: bool = False
    out: str = None

    def validate(self):
        if self.quantity not in QUANTITIES:
            raise ValueError("unknown quantity %r; valid names: %s"
                             % (self.quantity, ", ".join(QUANTITIES)))
        for name in ("theta_range", "kx_range", "kz_range", "r_range"):
            rng = getattr(self, name)
            if rng is None:
                continue
            a, b, n = rng
            if not (np.isfinite(a) and np.isfinite(b) and a < b):
                raise ValueError("%s must be an ordered finite range" % name)
            if int(n) < 2:
                raise ValueError("%s needs at least 2 samples" % name)
        if self.theta_range is not None:
            a, b, _ = self.theta_range
            if a < 0.0 or b > np.pi + 1e-12:
                raise ValueError("theta_range must lie within [0, pi]")
        if not 0.0 <= self.fixed_theta <= np.pi:
            raise ValueError("theta must lie within [0, pi]")
        if self.rho_values is not None and min(self.rho_values) <= 0.0:
            raise ValueError("rho values must be positive")


def _params(spec):
    """Scattering parameters, from (mass, omega) when both are given and
    from (gamma, k) otherwise."""
    if spec.mass is not None and spec.omega is not None:
        return classical.coulomb_reduction(
            classical.BlackHoleParams(spec.mass, spec.omega))
    if spec.mass is not None or spec.omega is not None:
        raise ValueError("mass and omega must be given together")
    return exact.ScatteringParams(gamma=spec.gamma, k=spec.k)


def _axis(rng, log=False):
    a, b, n = rng
    if log:
        if a <= 0.0:
            raise ValueError("logarithmic grid needs a positive start")
        return np.geomspace(a, b, int(n))
    return np.linspace(a, b, int(n))


def _theta_axis(spec, default, log_default=False):
    rng = spec.theta_range if spec.theta_range is not None else default
    log = spec.theta_log or (log_default and spec.theta_range is None)
    axis = _axis(rng, log=log)
    return axis


def _product_rows(outer, inner):
    """Row coordinates for an outer x inner sweep, outer varying slowest."""
    o = np.repeat(np.asarray(outer, dtype=np.float64), len(inner))
    i = np.tile(np.asarray(inner, dtype=np.float64), len(outer))
    return o, i


# each builder returns (header, n_rows, compute_chunk) where
# compute_chunk(start, stop) -> float array of shape (stop-start, n_cols)

def _build_psi_exact(spec):
    p = _params(spec)
    rho_values = spec.rho_values if spec.rho_values is not None else [10.0]
    lo = 0.01 if spec.with_asymptotic else 0.0
    theta = _theta_axis(spec, (lo, np.pi, 400))
    if spec.with_asymptotic and theta[0] <= 0.0:
        raise ValueError("theta = 0 requested for an asymptotic quantity")
    rho, th = _product_rows(rho_values, theta)
    header = ["rho", "theta", "re_psi", "im_psi", "abs_psi"]
    if spec.with_asymptotic:
        header += ["re_psi_asym", "im_psi_asym", "abs_psi_asym", "asym_valid"]

    def compute(start, stop):
        r, t = rho[start:stop], th[start:stop]
        psi = exact.psi_exact_grid(p, r, t)
        cols = [r, t, psi.real, psi.imag, np.abs(psi)]
        if spec.with_asymptotic:
            pin, pscat, valid = asymptotic.psi_asymptotic_grid(
                p, r, t, backreaction=spec.backreaction)
            tot = pin + pscat
            cols += [tot.real, tot.imag, np.abs(tot),
                     valid.astype(np.float64)]
        return np.column_stack(cols)

    return header, len(rho), compute


def _build_psi_asymptotic(spec):
    p = _params(spec)
    rho_values = spec.rho_values if spec.rho_values is not None else [10.0]
    theta = _theta_axis(spec, (0.01, np.pi, 400))
    if theta[0] <= 0.0:
        raise ValueError("theta = 0 requested for an asymptotic quantity")
    rho, th = _product_rows(rho_values, theta)
    header = ["rho", "theta", "re_psi_in", "im_psi_in", "re_psi_scat",
              "im_psi_scat", "re_psi", "im_psi", "abs_psi", "valid"]

    def compute(start, stop):
        r, t = rho[start:stop], th[start:stop]
        pin, pscat, valid = asymptotic.psi_asymptotic_grid(
            p, r, t, backreaction=spec.backreaction)
        tot = pin + pscat
        return np.column_stack([r, t, pin.real, pin.imag, pscat.real,
                                pscat.imag, tot.real, tot.imag, np.abs(tot),
                                valid.astype(np.float64)])

    return header, len(rho), compute


def _build_currents(spec):
    p = _params(spec)
    rho_values = spec.rho_values if spec.rho_values is not None else [10.0]
    theta = _theta_axis(spec, (0.05, 3.1, 400))
    if theta[0] <= 0.0:
        raise ValueError("theta = 0 requested for an asymptotic quantity")
    rho, th = _product_rows(rho_values, theta)
    header = ["rho", "theta",
              "j_r_total", "j_theta_total", "j_r_in", "j_theta_in",
              "j_r_scat", "j_theta_scat", "j_r_interf", "j_theta_interf",
              "j_r_exact", "j_theta_exact", "j_r_out", "j_theta_out",
              "j_r_g2out", "j_theta_g2out"]

    def compute(start, stop):
        r, t = rho[start:stop], th[start:stop]
        jr_t, jt_t, jr_i, jt_i, jr_s, jt_s = \
            currents.current_asymptotic_split_grid(
                p, r, t, backreaction=spec.backreaction)
        jr_x, jt_x = currents.current_exact_grid(p, r, t)
        jr_o, jt_o = currents.current_outgoing_grid(
            p, r, t, subtract_backreaction=False)
        jr_g, jt_g = currents.current_outgoing_grid(
            p, r, t, subtract_backreaction=True)
        return np.column_stack([r, t, jr_t, jt_t, jr_i, jt_i, jr_s, jt_s,
                                jr_t - jr_i - jr_s, jt_t - jt_i - jt_s,
                                jr_x, jt_x, jr_o, jt_o, jr_g, jt_g])

    return header, len(rho), compute


def _build_cross_section(spec):
    if spec.mass is not None and not spec.acknowledge_classical:
        raise ValueError(
            "a cross-section for the black-hole analogue is not a physical "
            "observable; pass --acknowledge-classical to emit it anyway")
    p = _params(spec)
    theta = _theta_axis(spec, (0.1, np.pi, 180))
    if theta[0] <= 0.0:
        raise ValueError("the cross-section diverges at theta = 0")
    header = ["theta", "rutherford", "closed_form_sq", "born_sq"]

    def compute(start, stop):
        t = theta[start:stop]
        ruth = asymptotic.differential_cross_section(p, t)
        closed = np.abs(multipole.f_closed_form(p, t)) ** 2
        born = np.abs(asymptotic.born_amplitude_yukawa(p, t, spec.mu)) ** 2
        return np.column_stack([t, ruth, closed, born])

    return header, len(theta), compute


def _build_cesaro(spec):
    p = _params(spec)
    n_values = (spec.cesaro_n_values if spec.cesaro_n_values is not None
                else [spec.cesaro_n])
    theta = _theta_axis(spec, (0.01, np.pi, 200), log_default=True)
    if theta[0] <= 0.0:
        raise ValueError("the series is not summable at theta = 0")
    nn, th = _product_rows(n_values, theta)
    header = ["n", "theta", "re_f", "im_f", "abs_f", "re_sf", "im_sf",
              "abs_sf", "re_sf_closed", "im_sf_closed", "abs_sf_closed"]

    def compute(start, stop):
        n_c, t = nn[start:stop], th[start:stop]
        f = np.empty_like(t, dtype=np.complex128)
        for n in np.unique(n_c):
            mask = n_c == n
            f[mask] = multipole.f_series_cesaro(p, t[mask], int(n))
        s = 1.0 - np.cos(t)
        fc = multipole.f_closed_form(p, t)
        return np.column_stack([n_c, t, f.real, f.imag, np.abs(f),
                                (s * f).real, (s * f).imag, np.abs(s * f),
                                (s * fc).real, (s * fc).imag,
                                np.abs(s * fc)])

    return header, len(nn), compute


def _build_reduced_series(spec):
    p = _params(spec)
    lm_values = (spec.ell_max_values if spec.ell_max_values is not None
                 else [spec.ell_max])
    theta = _theta_axis(spec, (0.01, 3.13, 200), log_default=True)
    if theta[0] <= 0.0 or theta[-1] >= np.pi:
        raise ValueError("the reduced series needs theta strictly inside "
                         "(0, pi)")
    lm, th = _product_rows(lm_values, theta)
    header = ["ell_max", "theta", "re_f", "im_f", "re_sf", "im_sf", "abs_sf",
              "re_sf_closed", "im_sf_closed", "abs_sf_closed"]

    def compute(start, stop):
        l_c, t = lm[start:stop], th[start:stop]
        f = np.empty_like(t, dtype=np.complex128)
        for lmax in np.unique(l_c):
            mask = l_c == lmax
            f[mask] = multipole.f_reduced_series(p, t[mask], int(lmax))
        s = 1.0 - np.cos(t)
        fc = multipole.f_closed_form(p, t)
        return np.column_stack([l_c, t, f.real, f.imag, (s * f).real,
                                (s * f).imag, np.abs(s * f),
                                (s * fc).real, (s * fc).imag,
                                np.abs(s * fc)])

    return header, len(lm), compute


def _build_diverging_sum(spec):
    p = _params(spec)
    if not 0.0 < spec.fixed_theta <= np.pi:
        raise ValueError("the series is not summable at theta = 0")
    if spec.ell_max < 0:
        raise ValueError("ell_max must be >= 0")
    sweep = multipole.f_series_partial_sweep(p, spec.fixed_theta,
                                             spec.ell_max)
    ells = np.arange(spec.ell_max + 1, dtype=np.float64)
    header = ["ell", "re_partial", "im_partial", "abs_partial"]

    def compute(start, stop):
        sl = sweep[start:stop]
        return np.column_stack([ells[start:stop], sl.real, sl.imag,
                                np.abs(sl)])

    return header, len(ells), compute


def _build_field_map(spec):
    p = _params(spec)
    kz = _axis(spec.kz_range if spec.kz_range is not None
               else (-40.0, 80.0, 241))
    if spec.kx_values is not None:
        kx_axis = np.asarray(spec.kx_values, dtype=np.float64)
    else:
        kx_axis = _axis(spec.kx_range if spec.kx_range is not None
                        else (-40.0, 40.0, 161))
    kx, kzr = _product_rows(kx_axis, kz)
    plateau = float(np.exp(-0.5 * np.pi * p.gamma
                           + specfun.log_gamma_complex(1.0 + 1j * p.gamma).real))
    header = ["kx", "kz", "re_psi", "im_psi", "abs_psi", "plateau"]

    def compute(start, stop):
        x, z = kx[start:stop], kzr[start:stop]
        rho = np.hypot(x, z)
        theta = np.arctan2(np.abs(x), z)
        psi = exact.psi_exact_grid(p, rho, theta)
        return np.column_stack([x, z, psi.real, psi.imag, np.abs(psi),
                                np.full_like(x, plateau)])

    return header, len(kx), compute


def _build_bh_mode(spec):
    if spec.mass is None or spec.omega is None:
        raise ValueError("bh_mode requires --mass and --omega")
    bh = classical.BlackHoleParams(spec.mass, spec.omega)
    if spec.r_range is not None:
        rng = spec.r_range
    else:
        rng = (50.0, 500.0, 200)
    r = _axis(rng)
    if r[0] <= bh.r_s:
        raise ValueError("r range must lie outside the horizon")
    u_asym = classical.radial_mode_asymptotic(bh, spec.ell, r)
    u_full = classical.integrate_full_mode(bh, spec.ell, float(r[-1]),
                                           r_start=min(10.0 * bh.r_s,
                                                       float(r[0])),
                                           r_eval=r)
    u_full = u_full / (bh.omega * r)
    header = ["r", "re_mode_asym", "im_mode_asym", "abs_mode_asym",
              "re_mode_full", "im_mode_full", "abs_mode_full"]

    def compute(start, stop):
        ua, uf = u_asym[start:stop], u_full[start:stop]
        return np.column_stack([r[start:stop], ua.real, ua.imag, np.abs(ua),
                                uf.real, uf.imag, np.abs(uf)])

    return header, len(r), compute


_BUILDERS = {
    "psi_exact": _build_psi_exact,
    "psi_asymptotic": _build_psi_asymptotic,
    "currents": _build_currents,
    "cross_section": _build_cross_section,
    "cesaro": _build_cesaro,
    "reduced_series": _build_reduced_series,
    "diverging_sum": _build_diverging_sum,
    "field_map": _build_field_map,
    "bh_mode": _build_bh_mode,
}


def _worker_count():
    workers = os.cpu_count() or 1
    cap = os.environ.get("SCATTER_THREADS")
    if cap is not None:
        try:
            workers = min(workers, max(1, int(cap)))
        except ValueError:
            raise ValueError("SCATTER_THREADS must be an integer")
    return workers


def run_scan(spec):
    """Compute the dataset for a validated spec and write it to spec.out.
    Returns (header, rows). Chunks of fixed size may be computed on worker
    threads; the output row order never depends on the worker count."""
    spec.validate()
    header, n_rows, compute = _BUILDERS[spec.quantity](spec)
    bounds = [(i, min(i + CHUNK_ROWS, n_rows))
              for i in range(0, n_rows, CHUNK_ROWS)]
    workers = _worker_count()
    if workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda se: compute(*se), bounds))
    else:
        parts = [compute(*se) for se in bounds]
    rows = np.vstack(parts)
    out = spec.out if spec.out is not None else spec.quantity + ".csv"
    write_csv(out, header, rows)
    return header, rows


def write_csv(path, header, rows):
    with open(path, "w", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join("%.17g" % v for v in row) + "\n")


_DESCRIPTIONS = {
    "psi_exact": (
        "exact scattering solution psi = e^{i rho (1-s)} e^{-pi gamma/2} "
        "Gamma(1+i gamma) 1F1(-i gamma, 1; i rho s), s = 1 - cos theta\n"
        "validity: everywhere (rho >= 0, theta in [0, pi]); finite on the "
        "forward axis, where |psi| = e^{-pi gamma/2} |Gamma(1+i gamma)|"),
    "psi_asymptotic": (
        "distorted plane wave e^{i(rho(1-s) + gamma ln rho s)} "
        "(optionally times 1 - i gamma^2/(rho s)) plus the scattered wave "
        "-(gamma/rho s) (Gamma(1+i gamma)/Gamma(1-i gamma)) "
        "e^{i(rho - gamma ln rho s)}\n"
        "validity: rho s >> 1 (the valid column uses rho s > 10); the "
        "split does not exist at theta = 0"),
    "currents": (
        "probability currents J = Im[psi* grad psi] of the asymptotic "
        "field (total, incoming, scattered, interference = total - in - "
        "scat) next to the exact-field current and the outgoing remainders "
        "J[psi - psi_in] without/with the gamma^2 amplitude correction\n"
        "validity: decomposition meaningful for rho s >> 1; all columns "
        "finite away from theta = 0"),
    "cross_section": (
        "dsigma/dOmega = gamma^2 / (4 k^2 sin^4(theta/2)), checked against "
        "|f_closed|^2 and the mu -> 0 screened Born amplitude "
        "-2 gamma k/(q^2 + mu^2), q = 2 k sin(theta/2)\n"
        "validity: theta in (0, pi]; for black-hole parameters the number "
        "is not an observable and needs --acknowledge-classical"),
    "cesaro": (
        "Cesaro (C,1) mean of the divergent amplitude series "
        "sum_ell ((2 ell+1)/(2 i k)) (e^{2 i delta_ell} - 1) P_ell; "
        "converges to the closed-form amplitude for theta != 0\n"
        "validity: theta in (0, pi]; convergence slows toward theta = 0"),
    "reduced_series": (
        "amplitude from the absolutely convergent reduced series: "
        "(gamma/k) sum_ell e^{2 i delta_ell} [ell/(ell + i gamma) - "
        "(ell+1)/(ell+1 - i gamma)] P_ell, divided by (1 - cos theta)\n"
        "validity: theta strictly inside (0, pi)"),
    "diverging_sum": (
        "raw partial sums of the same amplitude series, kept on purpose: "
        "their envelope grows like sqrt(ell_max), the divergence being an "
        "artifact of using the large-distance form of every partial wave\n"
        "validity: diagnostic only; not an amplitude"),
    "field_map": (
        "exact |psi| (and re/im) over a Cartesian (k x, k z) window, with "
        "the forward-plateau value e^{-pi gamma/2}|Gamma(1+i gamma)| in "
        "the plateau column\n"
        "validity: everywhere; the paraboloid rho s = 1 marks the damped "
        "interior"),
    "bh_mode": (
        "long-wavelength Schwarzschild scalar mode via the Coulomb map "
        "gamma = -2 M omega, k = omega: two-wave form "
        "((2 ell+1)/(2 i omega r)) [(-1)^{ell+1} e^{-i omega r_c} + "
        "e^{2 i delta_ell} e^{i omega r_c}], omega r_c = omega r - gamma "
        "ln(2 omega r), next to the directly integrated full mode "
        "(both in the u/(omega r) normalization)\n"
        "validity: ell(ell+1) > 12 (M omega)^2 and omega r >> ell(ell+1) + "
        "gamma^2; never valid for ell = 0"),
}


def describe(name):
    """Human-oriented one-paragraph description of a quantity: its
    governing formula and validity region."""
    if name not in _DESCRIPTIONS:
        raise ValueError("unknown quantity %r; valid names: %s"
                         % (name, ", ".join(QUANTITIES)))
    return name + ":\n" + _DESCRIPTIONS[name]


def load_preset(name):
    if name not in PRESETS:
        raise ValueError("unknown preset %r; valid presets: %s"
                         % (name, ", ".join(PRESETS)))
    path = resources.files("coulscat").joinpath("presets/%s.json" % name)
    return json.loads(path.read_text())


_TUPLE_FIELDS = ("theta_range", "kx_range", "kz_range", "r_range")


def _spec_from_mapping(data):
    known = {f.name for f in fields(ScanSpec)}
    unknown = set(data) - known
    if unknown:
        raise ValueError("unknown spec fields: %s" % ", ".join(sorted(unknown)))
    data = dict(data)
    for name in _TUPLE_FIELDS:
        if data.get(name) is not None:
            a, b, n = data[name]
            data[name] = (float(a), float(b), int(n))
    return ScanSpec(**data)


def _parse_range(text):
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected A:B:N")
    return float(parts[0]), float(parts[1]), int(parts[2])


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="scatter",
        description="Coulomb-scattering datasets as CSV; see 'scatter "
                    "describe <quantity>' for the formula behind each one.")
    parser.add_argument("quantity",
                        choices=QUANTITIES + ("describe",))
    parser.add_argument("name", nargs="?",
                        help="quantity name (describe mode only)")
    parser.add_argument("--preset", choices=PRESETS,
                        help="start from a named figure preset")
    parser.add_argument("--gamma", type=float)
    parser.add_argument("--k", type=float)
    parser.add_argument("--mass", type=float)
    parser.add_argument("--omega", type=float)
    parser.add_argument("--mu", type=float)
    parser.add_argument("--ell", type=int, help="partial-wave index "
                        "(bh_mode)")
    parser.add_argument("--ell-max", type=int)
    parser.add_argument("--cesaro-n", type=int)
    parser.add_argument("--theta", type=float,
                        help="fixed angle for diverging_sum")
    parser.add_argument("--rho", type=float, action="append",
                        help="rho value; repeat for several")
    parser.add_argument("--theta-range", type=_parse_range, metavar="A:B:N")
    parser.add_argument("--theta-log", action="store_true",
                        help="logarithmic theta grid")
    parser.add_argument("--kx", type=float, action="append",
                        help="field-map slice at fixed k x; repeatable")
    parser.add_argument("--kx-range", type=_parse_range, metavar="A:B:N")
    parser.add_argument("--kz-range", type=_parse_range, metavar="A:B:N")
    parser.add_argument("--r-range", type=_parse_range, metavar="A:B:N")
    parser.add_argument("--backreaction", action="store_true",
                        help="keep the gamma^2 amplitude correction in the "
                             "incoming wave")
    parser.add_argument("--with-asymptotic", action="store_true",
                        help="add asymptotic columns to psi_exact scans")
    parser.add_argument("--acknowledge-classical", action="store_true")
    parser.add_argument("--out", type=str)
    return parser


_ARG_TO_FIELD = {
    "gamma": "gamma", "k": "k", "mass": "mass", "omega": "omega",
    "mu": "mu", "ell": "ell", "ell_max": "ell_max",
    "cesaro_n": "cesaro_n", "theta": "fixed_theta", "rho": "rho_values",
    "theta_range": "theta_range", "kx": "kx_values",
    "kx_range": "kx_range", "kz_range": "kz_range", "r_range": "r_range",
    "out": "out",
}


def _spec_from_args(ns):
    data = {}
    if ns.preset is not None:
        data = load_preset(ns.preset)
        if data.get("quantity") != ns.quantity:
            raise ValueError("preset %s is a %s scan, not %s"
                             % (ns.preset, data.get("quantity"), ns.quantity))
    data["quantity"] = ns.quantity
    for arg, fname in _ARG_TO_FIELD.items():
        val = getattr(ns, arg)
        if val is not None:
            data[fname] = val
    for flag in ("backreaction", "theta_log", "with_asymptotic",
                 "acknowledge_classical"):
        if getattr(ns, flag):
            data[flag] = True
    return _spec_from_mapping(data)


def main(argv=None):
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        if ns.quantity == "describe":
            if ns.name is None:
                raise ValueError("describe needs a quantity name; valid "
                                 "names: %s" % ", ".join(QUANTITIES))
            print(describe(ns.name))
            return 0
        if ns.name is not None:
            raise ValueError("positional name is only used with describe")
        spec = _spec_from_args(ns)
        header, rows = run_scan(spec)
        out = spec.out if spec.out is not None else spec.quantity + ".csv"
        print("wrote %s (%d rows, %d columns)" % (out, rows.shape[0],
                                                  rows.shape[1]))
        return 0
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (RuntimeError, ArithmeticError) as exc:
        print("numerical failure: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
