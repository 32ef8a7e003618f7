"""Config-driven scenario runner.

A config file holds a list of named scenarios, each of a known kind with
a typed parameter set.  Running a scenario produces plot-ready CSV
tables plus a JSON summary with headline numbers and the results of the
kind's built-in invariant checks.  Everything is deterministic: no
randomness, no timestamps in outputs, floats serialized in round-trip
form (CSV) or rounded to 12 significant digits (JSON).
"""

from __future__ import annotations

import json
import math
import os
import time
from dataclasses import dataclass, field

import numpy as np
import yaml

from . import dce, horizon, modeode, squidsim, symplectic
from .constants import CODATA2018 as K
from .constants import UnitSystem
from .errors import ParseError, SchemaError

__all__ = ["Scenario", "RunReport", "ScenarioResult", "parse_config",
           "run_scenario", "sweep", "scenario_kinds", "SCHEMAS"]

SOLAR_MASS_KG = 1.989e30


# ---------------------------------------------------------------------------
# schema machinery


@dataclass(frozen=True)
class Param:
    name: str
    type: type
    doc: str
    required: bool = False
    default: object = None
    check: object = None          # callable value -> error string or None


def _positive(value):
    return None if value > 0 else "must be strictly positive"


def _nonnegative(value):
    return None if value >= 0 else "must be >= 0"


SCHEMAS: dict[str, list[Param]] = {
    "paramp": [
        Param("eta", float, "pump coupling strength, 1/s", required=True,
              check=_positive),
        Param("t", float, "evolution time, s", required=True,
              check=_nonnegative),
        Param("mode", str, "amplifier type: dpa or ndpa", default="dpa",
              check=lambda v: None if v in ("dpa", "ndpa")
              else "must be 'dpa' or 'ndpa'"),
        Param("omega_s", float, "signal mode frequency, rad/s",
              default=2 * math.pi * 5e9, check=_positive),
        Param("n_points", int, "time samples in the CSV", default=101,
              check=lambda v: None if v >= 2 else "need at least 2 points"),
    ],
    "quench": [
        Param("omega_in", float, "initial frequency, rad/s", required=True,
              check=_positive),
        Param("omega_out", float, "final frequency, rad/s", required=True,
              check=_positive),
        Param("profile", str, "sudden_step or tanh_ramp",
              default="sudden_step",
              check=lambda v: None if v in ("sudden_step", "tanh_ramp")
              else "must be 'sudden_step' or 'tanh_ramp'"),
        Param("ramp_time", float, "tanh ramp time constant, s", default=0.0,
              check=_nonnegative),
        Param("mass", float, "oscillator mass, kg", default=1.0,
              check=_positive),
    ],
    "swing": [
        Param("theta0", float, "initial angle, rad", default=0.02),
        Param("angular_momentum0", float, "initial angular momentum, "
              "kg m^2/s", default=0.0),
        Param("mass", float, "pendulum mass, kg", default=1.0,
              check=_positive),
        Param("length", float, "pendulum length, m", default=1.0,
              check=_positive),
        Param("epsilon", float, "pump rate, 1/s", default=0.1,
              check=_nonnegative),
        Param("t_max", float, "trace duration, s", required=True,
              check=_positive),
        Param("n_points", int, "time samples in the CSV", default=401,
              check=lambda v: None if v >= 2 else "need at least 2 points"),
    ],
    "unruh": [
        Param("proper_acceleration", float, "observer acceleration, m/s^2",
              default=9.8, check=_positive),
        Param("probe_frequency_ratio", float,
              "probe wave frequency over a/c", default=1.0, check=_positive),
        Param("n_samples", int, "waveform samples", default=2**16,
              check=lambda v: None if v >= 2**12 else "need >= 4096 samples"),
        Param("band_lo", float, "fit band lower edge, units of a/c",
              default=0.5, check=_positive),
        Param("band_hi", float, "fit band upper edge, units of a/c",
              default=3.0, check=_positive),
        Param("n_band_points", int, "CSV rows across the band", default=26,
              check=lambda v: None if v >= 2 else "need at least 2 points"),
    ],
    "blackhole": [
        Param("mass_solar", float, "black hole mass in solar masses",
              default=1.0, check=_positive),
        Param("r_max_over_rs", float, "outer radius of the profile table",
              default=1e6, check=lambda v: None if v > 1.01
              else "must exceed 1.01"),
        Param("n_points", int, "radial samples", default=41,
              check=lambda v: None if v >= 2 else "need at least 2 points"),
    ],
    "dce_cavity": [
        Param("z0", float, "cavity length, m", default=0.01,
              check=_positive),
        Param("epsilon", float, "relative drive amplitude", default=0.01,
              check=lambda v: None if 0 <= v < 0.5 else "must lie in [0, 0.5)"),
        Param("drive_crossings", float,
              "equivalent full-amplitude drive time, cavity crossings z0/c",
              default=7.0, check=_nonnegative),
        Param("drive_multiple", float,
              "drive frequency in units of the fundamental", default=2.0,
              check=_positive),
        Param("n_max", int, "retained mode cutoff", default=48,
              check=lambda v: None if 1 <= v <= 128 else "must lie in [1, 128]"),
        Param("grid_divisions", int, "Moore grid steps per cavity length",
              default=2048, check=lambda v: None if v >= 64
              else "need at least 64"),
    ],
    "dce_receding": [
        Param("kappa", float, "recession rate, 1/s", required=True,
              check=_positive),
        Param("A_times_kappa", float,
              "trajectory constant A in units of 1/kappa", default=0.5,
              check=lambda v: None if 0 < v < 1
              else "must lie in (0, 1) for a sub-luminal start"),
        Param("band_lo", float, "fit band lower edge, units of kappa",
              default=0.5, check=_positive),
        Param("band_hi", float, "fit band upper edge, units of kappa",
              default=3.0, check=_positive),
        Param("n_band_points", int, "CSV rows across the band", default=26,
              check=lambda v: None if v >= 2 else "need at least 2 points"),
    ],
    "squid_horizon": [
        Param("junction_critical_current", float, "I_c per junction, A",
              default=85e-6, check=_positive),
        Param("junction_capacitance", float, "C_J per junction, F",
              default=0.82e-15, check=_positive),
        Param("ground_capacitance", float, "C0 per cell, F", default=1e-17,
              check=_positive),
        Param("cell_spacing", float, "cell pitch, m", default=0.25e-6,
              check=_positive),
        Param("amplitude_fraction", float, "pulse amplitude over Phi_0",
              default=0.2, check=lambda v: None if 0 < v < 0.5
              else "must lie in (0, 0.5): half a flux quantum suppresses "
              "the junctions"),
        Param("velocity_fraction", float,
              "pulse speed over the unbiased line speed", default=0.95,
              check=_positive),
        Param("frequency_safety", float,
              "plasma frequency over the pulse edge frequency scale",
              default=10.0, check=lambda v: None if v >= 1
              else "must be >= 1"),
        Param("n_points", int, "profile samples", default=201,
              check=lambda v: None if v >= 2 else "need at least 2 points"),
    ],
}


@dataclass(frozen=True)
class Scenario:
    name: str
    kind: str
    params: dict
    output: dict = field(default_factory=dict)


@dataclass
class ScenarioResult:
    tables: dict           # table name -> (column names, column arrays)
    headline: dict
    checks: list           # (check name, passed, detail)


@dataclass
class RunReport:
    scenario: Scenario
    headline: dict
    checks: list
    outputs: list
    wall_time: float
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(ok for _, ok, _ in self.checks)


def scenario_kinds() -> list[str]:
    return sorted(SCHEMAS)


def _validate_params(kind: str, raw: dict) -> dict:
    schema = SCHEMAS[kind]
    known = {p.name: p for p in schema}
    for key in raw:
        if key not in known:
            raise SchemaError(f"unknown key {key!r} for kind {kind!r}",
                              key=key)
    params = {}
    for p in schema:
        if p.name in raw:
            value = raw[p.name]
            try:
                value = p.type(value)
            except (TypeError, ValueError):
                raise SchemaError(
                    f"key {p.name!r}: expected {p.type.__name__}, got "
                    f"{value!r}", key=p.name) from None
        elif p.required:
            raise SchemaError(f"missing required key {p.name!r} for kind "
                              f"{kind!r}", key=p.name)
        else:
            value = p.default
        if p.check is not None and value is not None:
            message = p.check(value)
            if message:
                raise SchemaError(f"key {p.name!r}: {message}", key=p.name)
        params[p.name] = value
    if kind == "quench" and params["profile"] == "tanh_ramp" \
            and params["ramp_time"] <= 0:
        raise SchemaError("key 'ramp_time': tanh_ramp requires a positive "
                          "ramp_time", key="ramp_time")
    if kind == "unruh" or kind == "dce_receding":
        if params["band_lo"] >= params["band_hi"]:
            raise SchemaError("key 'band_hi': band_hi must exceed band_lo",
                              key="band_hi")
    return params


def parse_config(path) -> list[Scenario]:
    """Read and validate a YAML scenario file.

    Top level is either a list of scenario mappings or a mapping with a
    'scenarios' list; each scenario needs 'name' and 'kind', optional
    'params' and 'output'.
    """
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        line = mark.line + 1 if mark else None
        column = mark.column + 1 if mark else None
        raise ParseError(f"invalid YAML in {path}: {exc}", line=line,
                         column=column) from None
    if isinstance(doc, dict):
        if set(doc) - {"scenarios"}:
            extra = sorted(set(doc) - {"scenarios"})[0]
            raise SchemaError(f"unknown top-level key {extra!r}", key=extra)
        doc = doc.get("scenarios", [])
    if not isinstance(doc, list):
        raise SchemaError("config must be a list of scenarios or a mapping "
                          "with a 'scenarios' list")
    scenarios = []
    seen = set()
    for i, entry in enumerate(doc):
        if not isinstance(entry, dict):
            raise SchemaError(f"scenario #{i + 1} is not a mapping")
        extra = set(entry) - {"name", "kind", "params", "output"}
        if extra:
            key = sorted(extra)[0]
            raise SchemaError(f"unknown key {key!r} in scenario #{i + 1}",
                              key=key)
        name = entry.get("name")
        kind = entry.get("kind")
        if not name or not isinstance(name, str):
            raise SchemaError(f"scenario #{i + 1} needs a string 'name'",
                              key="name")
        if name in seen:
            raise SchemaError(f"duplicate scenario name {name!r}", key="name")
        seen.add(name)
        if kind not in SCHEMAS:
            raise SchemaError(
                f"scenario {name!r}: unknown kind {kind!r} (known: "
                f"{', '.join(scenario_kinds())})", key="kind")
        params = _validate_params(kind, entry.get("params") or {})
        output = entry.get("output") or {}
        if not isinstance(output, dict) or set(output) - {"dir", "csv", "json"}:
            raise SchemaError(f"scenario {name!r}: output accepts only "
                              f"'dir', 'csv', 'json'", key="output")
        scenarios.append(Scenario(name, kind, params, output))
    return scenarios


# ---------------------------------------------------------------------------
# scenario implementations


def _run_paramp(p: dict) -> ScenarioResult:
    times = np.linspace(0.0, p["t"], p["n_points"])
    rate = 2.0 * p["eta"] if p["mode"] == "dpa" else p["eta"]
    evolve = symplectic.dpa_evolution if p["mode"] == "dpa" \
        else symplectic.ndpa_evolution
    alphas = np.cosh(rate * times)
    betas = np.sinh(rate * times)
    numbers = betas**2
    columns = ["t_s", "alpha", "beta", "n_photons"]
    data = [times, alphas, betas, numbers]
    if p["mode"] == "dpa":
        columns += ["var_x1", "var_x2"]
        data += [np.exp(4.0 * p["eta"] * times), np.exp(-4.0 * p["eta"] * times)]
    final = evolve(p["eta"], p["t"])
    r_final = rate * p["t"]
    headline = {
        "mode": p["mode"],
        "squeeze_parameter": r_final,
        "n_photons": symplectic.mean_photon_number(final),
        "symplectic_residual": final.residual,
    }
    checks = [("symplectic_constraint", final.residual < 1e-9,
               f"relative residual {final.residual:.3e}")]
    if p["mode"] == "dpa":
        v1, v2 = symplectic.quadrature_variances(p["eta"], p["t"])
        headline["var_x1"] = v1
        headline["var_x2"] = v2
        headline["squeezing_db"] = -10.0 * math.log10(v2) if v2 > 0 else None
        checks.append(("uncertainty_product", abs(v1 * v2 - 1.0) < 1e-12,
                       f"var_x1 var_x2 - 1 = {v1 * v2 - 1.0:.3e}"))
    else:
        if r_final > 0:
            headline["entanglement_entropy_nats"] = \
                symplectic.entanglement_entropy(r_final, p["omega_s"])
            headline["effective_temperature_K"] = \
                symplectic.invert_effective_temperature(r_final, p["omega_s"])
        else:
            headline["entanglement_entropy_nats"] = 0.0
            headline["effective_temperature_K"] = 0.0
    return ScenarioResult({"evolution": (columns, data)}, headline, checks)


def _run_quench(p: dict) -> ScenarioResult:
    w_in, w_out = p["omega_in"], p["omega_out"]
    if p["profile"] == "tanh_ramp":
        profile = modeode.FrequencyProfile("tanh_ramp", omega_in=w_in,
                                           omega_out=w_out,
                                           ramp_time=p["ramp_time"])
        width = p["ramp_time"]
    else:
        profile = modeode.FrequencyProfile("sudden_step", omega_in=w_in,
                                           omega_out=w_out)
        width = profile.step_width
    horizon_time = max(20.0 * width, 2.0 / min(w_in, w_out))
    traj = modeode.evolve_mode(profile, -horizon_time, horizon_time,
                               m=p["mass"])
    bmap = modeode.extract_bogoliubov(traj, w_out)
    beta_sq = symplectic.mean_photon_number(bmap)
    sudden_reference = (w_out - w_in) ** 2 / (4.0 * w_in * w_out)
    columns = ["t_s", "f_re", "f_im", "fdot_re", "fdot_im", "kg_norm"]
    data = [traj.times, traj.f.real, traj.f.imag, traj.fdot.real,
            traj.fdot.imag, traj.kg_norm_history]
    norm_budget = 10.0 * traj.tol * len(traj.times)
    norm_drift = float(np.max(np.abs(traj.kg_norm_history - 1.0)))
    headline = {
        "profile": p["profile"],
        "alpha_abs": abs(bmap.alpha),
        "beta_abs": abs(bmap.beta),
        "n_photons": beta_sq,
        "sudden_reference_n": sudden_reference,
        "symplectic_residual": bmap.residual,
        "kg_norm_drift": norm_drift,
    }
    checks = [
        ("symplectic_constraint", bmap.residual < 1e-6,
         f"residual {bmap.residual:.3e}"),
        ("kg_norm_conserved", norm_drift < norm_budget,
         f"drift {norm_drift:.3e} vs budget {norm_budget:.3e}"),
    ]
    return ScenarioResult({"mode_function": (columns, data)}, headline,
                          checks)


def _run_swing(p: dict) -> ScenarioResult:
    times = np.linspace(0.0, p["t_max"], p["n_points"])
    theta = modeode.parametric_swing(p["theta0"], p["angular_momentum0"],
                                     p["mass"], p["length"], p["epsilon"],
                                     times)
    quiet = modeode.parametric_swing(0.0, 0.0, p["mass"], p["length"],
                                     p["epsilon"], times)
    w_s = math.sqrt(modeode.STANDARD_GRAVITY / p["length"])
    headline = {
        "swing_frequency": w_s,
        "theta_final": float(theta[-1]),
        "envelope_gain": math.exp(p["epsilon"] * p["t_max"] / 2.0),
    }
    checks = [("vacuum_stays_quiet", bool(np.all(quiet == 0.0)),
               "zero initial conditions give zero classical motion")]
    return ScenarioResult({"swing": (["t_s", "theta_rad"], [times, theta])},
                          headline, checks)


def _run_unruh(p: dict) -> ScenarioResult:
    params = horizon.AccelerationParams(p["proper_acceleration"])
    a = params.accel_param
    spectrum = horizon.unruh_spectrum(p["probe_frequency_ratio"] * a, params,
                                      n_samples=p["n_samples"])
    band = (p["band_lo"] * a, p["band_hi"] * a)
    t_fit, residual = horizon.planck_fit_1d(spectrum, band)
    t_exact = horizon.unruh_temperature(params)

    omegas = np.linspace(band[0], band[1], p["n_band_points"])
    p_pos = spectrum.interp_power(omegas)
    p_neg = spectrum.interp_power(-omegas)
    x = K.hbar * omegas / (K.k_B * t_fit)
    shape = 1.0 / (omegas * np.expm1(x))
    # amplitude of the fitted model from the mean log offset
    amplitude = math.exp(float(np.mean(np.log(p_neg) - np.log(shape))))
    model = amplitude * shape

    db_err = float(np.max(np.abs(
        p_neg / p_pos / np.exp(-2 * math.pi * omegas / a) - 1.0)))
    form_err = float(np.max(np.abs(
        p_neg * (omegas * a / (2 * math.pi)) * np.expm1(2 * math.pi * omegas / a)
        - 1.0)))
    headline = {
        "accel_param": a,
        "T_unruh_exact_K": t_exact,
        "T_fitted_K": t_fit,
        "fit_rel_error": abs(t_fit / t_exact - 1.0),
        "fit_log_residual": residual,
        "detailed_balance_max_err": db_err,
        "planck_form_max_err": form_err,
    }
    checks = [
        ("planck_fit_within_1pc", abs(t_fit / t_exact - 1.0) < 0.01,
         f"relative error {abs(t_fit / t_exact - 1.0):.2e}"),
        ("detailed_balance_within_1pc", db_err < 0.01, f"max {db_err:.2e}"),
        ("planck_form_within_2pc", form_err < 0.02, f"max {form_err:.2e}"),
    ]
    table = (["omega_rad_s", "p_pos", "p_neg", "planck_model"],
             [omegas, p_pos, p_neg, model])
    return ScenarioResult({"spectrum": table}, headline, checks)


def _run_blackhole(p: dict) -> ScenarioResult:
    bh = horizon.BlackHole(p["mass_solar"] * SOLAR_MASS_KG)
    r_s = horizon.schwarzschild_radius(bh)
    kappa, gamma = horizon.surface_gravity(bh)
    t_h = horizon.hawking_temperature(bh)
    ratios = np.geomspace(1.001, p["r_max_over_rs"], p["n_points"])
    radii = ratios * r_s
    redshift = np.array([horizon.redshift_factor(bh, r) for r in radii])
    accel = np.array([horizon.static_acceleration(bh, r) for r in radii])
    t_local = np.array([horizon.local_temperature(bh, r) for r in radii])
    u_ff = np.array([horizon.pg_freefall_velocity(bh, r) for r in radii])

    product_expected = K.hbar * K.c**3 / (8 * math.pi * K.G * K.k_B)
    product_err = abs(t_h * bh.mass / product_expected - 1.0)
    dm = bh.mass * 1e-7
    ds_dm = (horizon.bh_entropy(horizon.BlackHole(bh.mass + dm))
             - horizon.bh_entropy(horizon.BlackHole(bh.mass - dm))) / (2 * dm)
    first_law_err = abs(t_h * ds_dm / K.c**2 - 1.0)
    headline = {
        "mass_kg": bh.mass,
        "schwarzschild_radius_m": r_s,
        "surface_gravity_m_s2": kappa,
        "gamma_1_s": gamma,
        "hawking_temperature_K": t_h,
        "entropy_J_K": horizon.bh_entropy(bh),
        "power_1d_W": horizon.power_1d(t_h),
        "t_h_times_mass": t_h * bh.mass,
    }
    checks = [
        ("t_h_mass_product", product_err < 1e-12, f"error {product_err:.2e}"),
        ("first_law_de_t_ds", first_law_err < 1e-6,
         f"error {first_law_err:.2e}"),
    ]
    table = (["r_m", "redshift_factor", "static_accel_m_s2",
              "local_temperature_K", "freefall_velocity_m_s"],
             [radii, redshift, accel, t_local, u_ff])
    return ScenarioResult({"profile": table}, headline, checks)


def _run_dce_cavity(p: dict) -> ScenarioResult:
    units = UnitSystem("natural", scale=p["z0"])
    z0 = 1.0
    omega_1 = math.pi / z0
    driven = p["epsilon"] > 0 and p["drive_crossings"] > 0
    traj = dce.MirrorTrajectory(
        "sinusoidal" if driven else "static", z0=z0,
        epsilon=p["epsilon"] if driven else 0.0,
        drive_frequency=p["drive_multiple"] * omega_1 if driven else 0.0,
        t_drive=p["drive_crossings"] if driven else 0.0)
    t_eval = traj.t_stop + 1.0
    rfunc = dce.solve_moore(traj, T=t_eval + 1.0,
                            grid_step=z0 / p["grid_divisions"])
    t_check = np.linspace(0.01, t_eval + 0.99, 4 * p["grid_divisions"])
    residual = float(np.max(rfunc.residual(traj, t_check)))
    mats = dce.dce_bogoliubov(rfunc, traj, t_eval, n_max=p["n_max"])
    modes = np.arange(1, p["n_max"] // 2 + 1)
    numbers = np.array([dce.photon_number_out(mats, int(m)) for m in modes])
    n_1 = float(numbers[0])
    squeeze_arg = p["epsilon"] * omega_1 * p["drive_crossings"] / 2.0
    unitarity = mats.cutoff_loss()
    headline = {
        "omega_1_rad_s": units.to_si(omega_1, "frequency"),
        "drive_frequency_rad_s": units.to_si(
            p["drive_multiple"] * omega_1, "frequency"),
        "drive_time_s": units.to_si(p["drive_crossings"], "time"),
        "n_1": n_1,
        "total_photons": float(np.sum(numbers)),
        "squeeze_rate_prediction": math.sinh(squeeze_arg) ** 2,
        "moore_residual": residual,
        "unitarity_max_dev": unitarity,
    }
    checks = [
        ("moore_residual", residual < 1e-6, f"residual {residual:.3e}"),
        ("row_unitarity", unitarity < 1e-3, f"deviation {unitarity:.3e}"),
    ]
    if p["epsilon"] == 0.0:
        checks.append(("no_drive_no_photons", n_1 < 1e-10,
                       f"N_1 = {n_1:.3e}"))
    table = (["mode", "n_photons"], [modes.astype(float), numbers])
    return ScenarioResult({"photons": table}, headline, checks)


def _run_dce_receding(p: dict) -> ScenarioResult:
    kappa = p["kappa"]
    a_const = p["A_times_kappa"] / kappa
    band = (p["band_lo"] * kappa, p["band_hi"] * kappa)
    spectrum = dce.receding_mirror_spectrum(a_const, kappa, fit_band=band)
    t_eff = spectrum.fitted_temperature
    expected = kappa / (2.0 * math.pi)
    omegas = np.linspace(band[0], band[1], p["n_band_points"])
    headline = {
        "T_eff_natural": t_eff,
        "kappa_over_2pi": expected,
        "fit_rel_error": abs(t_eff / expected - 1.0),
        "fit_log_residual": spectrum.fit_residual,
        "T_eff_kelvin": K.hbar * 2.0 * math.pi * t_eff / (2.0 * math.pi * K.k_B),
    }
    checks = [("effective_temperature_within_2pc",
               abs(t_eff / expected - 1.0) < 0.02,
               f"relative error {abs(t_eff / expected - 1.0):.2e}")]
    table = (["omega_rad_s", "p_pos", "p_neg"],
             [omegas, spectrum.interp_power(omegas),
              spectrum.interp_power(-omegas)])
    return ScenarioResult({"spectrum": table}, headline, checks)


def _run_squid_horizon(p: dict) -> ScenarioResult:
    params = squidsim.SquidParams(
        junction_critical_current=p["junction_critical_current"],
        junction_capacitance=p["junction_capacitance"],
        ground_capacitance=p["ground_capacitance"],
        cell_spacing=p["cell_spacing"])
    pulse = squidsim.reference_pulse(
        params, amplitude_fraction=p["amplitude_fraction"],
        velocity_fraction=p["velocity_fraction"],
        frequency_safety=p["frequency_safety"])
    report = squidsim.find_horizon(params, pulse)
    fd_gradient = squidsim.finite_difference_gradient(params, pulse,
                                                      report.position)
    gradient_err = abs(report.gradient / fd_gradient - 1.0)
    i_c_min = squidsim.squid_critical_current(
        params.junction_critical_current, pulse.amplitude)
    w_p_min = squidsim.plasma_frequency(i_c_min, params.junction_capacitance)

    x = np.linspace(-8.0, 8.0, p["n_points"]) / pulse.steepness
    c_s = squidsim.speed_of_light_profile(params, pulse, x)
    g_tt, _, _ = squidsim.effective_metric(params, pulse, x)
    headline = {
        "unbiased_speed_m_s": float(squidsim.speed_of_light_profile(
            params, squidsim.FluxPulse("none"), 0.0)),
        "pulse_velocity_m_s": pulse.center_velocity,
        "pulse_steepness_1_m": pulse.steepness,
        "horizon_position_m": report.position,
        "speed_gradient_1_s": report.gradient,
        "hawking_temperature_K": report.temperature,
        "hawking_temperature_mK": 1e3 * report.temperature,
        "power_W": report.power,
        "plasma_frequency_min_rad_s": w_p_min,
        "edge_frequency_scale_rad_s": pulse.center_velocity * pulse.steepness,
    }
    checks = [
        ("root_accuracy", report.residual < 1e-10,
         f"|c_s(x_h) - u|/u = {report.residual:.2e}"),
        ("gradient_consistency", gradient_err < 1e-3,
         f"analytic vs finite difference: {gradient_err:.2e}"),
        ("edge_below_plasma_scale",
         pulse.center_velocity * pulse.steepness
         <= w_p_min / p["frequency_safety"] * (1 + 1e-12),
         "pulse edge frequency scale under the plasma cap"),
    ]
    table = (["x_m", "c_s_m_s", "g_tt"], [x, c_s, g_tt])
    return ScenarioResult({"profile": table}, headline, checks)


_RUNNERS = {
    "paramp": _run_paramp,
    "quench": _run_quench,
    "swing": _run_swing,
    "unruh": _run_unruh,
    "blackhole": _run_blackhole,
    "dce_cavity": _run_dce_cavity,
    "dce_receding": _run_dce_receding,
    "squid_horizon": _run_squid_horizon,
}


# ---------------------------------------------------------------------------
# serialization


def _format_cell(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def _write_csv(path, columns, data):
    rows = len(data[0])
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(",".join(columns) + "\n")
        for i in range(rows):
            handle.write(",".join(_format_cell(col[i]) for col in data)
                         + "\n")


def _round_floats(obj):
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        value = float(obj)
        if not math.isfinite(value):
            return None
        return float(f"{value:.12g}")
    return obj


def resolve_out_dir(scenario: Scenario, out_dir=None) -> str:
    if out_dir:
        return out_dir
    if scenario.output.get("dir"):
        return scenario.output["dir"]
    return os.environ.get("VACUUM_AMP_OUT", "out")


def run_scenario(scenario: Scenario, out_dir=None) -> RunReport:
    """Execute one scenario and write its CSV/JSON outputs.

    The JSON report is always written, also when the scenario errors
    (with the error message in place of results).  Wall time is reported
    on the console only, never in the files, so reruns are byte
    identical.
    """
    directory = resolve_out_dir(scenario, out_dir)
    os.makedirs(directory, exist_ok=True)
    write_csv = scenario.output.get("csv", True)
    write_json = scenario.output.get("json", True)

    started = time.perf_counter()
    outputs = []
    error = None
    headline, checks = {}, []
    try:
        result = _RUNNERS[scenario.kind](scenario.params)
        headline, checks = result.headline, result.checks
        if write_csv:
            for table_name, (columns, data) in result.tables.items():
                if len(result.tables) == 1:
                    csv_name = f"{scenario.name}.csv"
                else:
                    csv_name = f"{scenario.name}__{table_name}.csv"
                csv_path = os.path.join(directory, csv_name)
                _write_csv(csv_path, columns, data)
                outputs.append(csv_path)
    except Exception as exc:  # scenario-level isolation
        error = f"{type(exc).__name__}: {exc}"
    wall = time.perf_counter() - started

    if write_json:
        json_path = os.path.join(directory, f"{scenario.name}.json")
        payload = {
            "name": scenario.name,
            "kind": scenario.kind,
            "params": _round_floats(scenario.params),
            "headline": _round_floats(headline),
            "checks": [{"name": n, "passed": bool(ok), "detail": d}
                       for n, ok, d in checks],
            "error": error,
        }
        with open(json_path, "w", encoding="utf-8", newline="\n") as handle:
            json.dump(payload, handle, indent=2)
            handle.write("\n")
        outputs.append(json_path)
    return RunReport(scenario, headline, checks, outputs, wall, error)


def sweep(scenario: Scenario, axis: str, values, out_dir=None) -> list[RunReport]:
    """Run independent copies of a scenario along one numeric parameter.

    Each point is isolated: a failing point produces a report carrying
    the error while the rest proceed.  A combined CSV with the axis as
    first column collects the shared numeric headline fields.
    """
    schema_names = {p.name for p in SCHEMAS[scenario.kind]}
    if axis not in schema_names:
        raise SchemaError(f"axis {axis!r} is not a parameter of kind "
                          f"{scenario.kind!r}", key=axis)
    reports = []
    for i, value in enumerate(values):
        params = dict(scenario.params)
        params[axis] = value
        params = _validate_params(scenario.kind, params)
        point = Scenario(f"{scenario.name}__{axis}_{i:03d}", scenario.kind,
                         params, scenario.output)
        reports.append(run_scenario(point, out_dir))
    if reports:
        directory = resolve_out_dir(scenario, out_dir)
        keys = [k for k, v in reports[0].headline.items()
                if isinstance(v, (int, float, np.floating)) and v is not None]
        columns = [axis] + keys
        data_rows = []
        for value, report in zip(values, reports):
            row = [float(value)] + [
                float(report.headline.get(k)) if report.error is None
                and isinstance(report.headline.get(k), (int, float,
                                                        np.floating))
                else float("nan")
                for k in keys]
            data_rows.append(row)
        arrays = [np.array([row[j] for row in data_rows])
                  for j in range(len(columns))]
        _write_csv(os.path.join(directory, f"{scenario.name}__sweep.csv"),
                   columns, arrays)
    return reports
