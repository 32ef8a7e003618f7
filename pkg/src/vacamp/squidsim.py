"""dc-SQUID array transmission line as an analogue black hole.

Each cell of the line is a flux-tunable inductor (a two-junction SQUID)
to ground capacitance C0, so the local signal velocity is
c_s = dx / sqrt(L C0) with L set by the external flux.  A step-like
flux pulse moving at fixed speed u slows the line locally; in the frame
comoving with the pulse the wave equation carries an effective metric
with a horizon where c_s(x) = u, emitting a 1D thermal spectrum whose
temperature is set by the velocity gradient at that point.  Also
includes the effective-length boundary condition of a SQUID-terminated
waveguide used in the circuit Casimir setup.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import CODATA2018, PhysicalConstants
from .errors import NoHorizon, OverCritical, SuppressedJunction
from .horizon import power_1d

__all__ = [
    "SquidParams",
    "FluxPulse",
    "HorizonReport",
    "squid_critical_current",
    "squid_inductance",
    "plasma_frequency",
    "speed_of_light_profile",
    "effective_metric",
    "find_horizon",
    "analogue_hawking_temperature",
    "analogue_spectrum",
    "squid_effective_length",
    "resonator_effective_length",
    "reference_array",
    "reference_pulse",
]

_COS_FLOOR = 1e-12


@dataclass(frozen=True)
class SquidParams:
    """Circuit constants of the array (all SI, all strictly positive)."""

    junction_critical_current: float   # I_c per junction, A
    junction_capacitance: float        # C_J per junction, F
    ground_capacitance: float          # C0 per cell, F
    cell_spacing: float                # dx, m
    waveguide_inductance_per_length: float = 4.0e-7  # L0, H/m

    def __post_init__(self):
        for name in ("junction_critical_current", "junction_capacitance",
                     "ground_capacitance", "cell_spacing",
                     "waveguide_inductance_per_length"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be strictly positive")


@dataclass(frozen=True)
class FluxPulse:
    """External-flux profile in the frame comoving with the pulse.

    shape "tanh_step": Phi(x) = (amplitude/2) (1 + tanh(steepness x)),
    rising toward positive x.  amplitude is in Wb and must stay strictly
    below half a flux quantum so the junctions are never fully
    suppressed.
    """

    shape: str = "none"
    amplitude: float = 0.0
    center_velocity: float = 0.0
    steepness: float = 0.0
    flux_quantum: float = CODATA2018.flux_quantum

    def __post_init__(self):
        if self.shape not in ("none", "tanh_step"):
            raise ValueError(f"unknown pulse shape {self.shape!r}")
        if not 0.0 <= self.amplitude < 0.5 * self.flux_quantum:
            raise ValueError(
                "amplitude must lie in [0, Phi_0/2) to keep I_c^s > 0")
        if self.shape == "tanh_step" and self.steepness <= 0:
            raise ValueError("tanh_step requires steepness > 0")

    def flux(self, x):
        x = np.asarray(x, dtype=float)
        if self.shape == "none" or self.amplitude == 0.0:
            return np.zeros_like(x)
        return 0.5 * self.amplitude * (1.0 + np.tanh(self.steepness * x))

    def flux_gradient(self, x):
        x = np.asarray(x, dtype=float)
        if self.shape == "none" or self.amplitude == 0.0:
            return np.zeros_like(x)
        sech2 = 1.0 / np.cosh(self.steepness * x) ** 2
        return 0.5 * self.amplitude * self.steepness * sech2


@dataclass(frozen=True)
class HorizonReport:
    """Located analogue horizon and its thermal output."""

    position: float          # comoving x_h, m
    gradient: float          # |d c_s / d x| at x_h, 1/s
    temperature: float       # K
    power: float             # W
    residual: float          # |c_s(x_h) - u| / u


def squid_critical_current(I_c: float, phi_ext: float,
                           consts: PhysicalConstants = CODATA2018) -> float:
    """Flux-tunable critical current I_c^s = 2 I_c cos(pi Phi_ext / Phi_0)."""
    if I_c <= 0:
        raise ValueError("I_c must be positive")
    c = math.cos(math.pi * phi_ext / consts.flux_quantum)
    if c <= _COS_FLOOR:
        raise SuppressedJunction(
            f"Phi_ext = {phi_ext!r} suppresses the critical current")
    return 2.0 * I_c * c


def squid_inductance(I: float, I_c_s: float,
                     consts: PhysicalConstants = CODATA2018) -> float:
    """Current-dependent SQUID inductance.

    L = [Phi_0 / (2 pi I_c^s)] arcsin(I/I_c^s) / (I/I_c^s); the I -> 0
    limit is Phi_0 / (2 pi I_c^s).  Monotone increasing in |I|, reaching
    pi/2 times the zero-current value at the critical current.
    """
    if I_c_s <= 0:
        raise SuppressedJunction("effective critical current must be positive")
    x = abs(I) / I_c_s
    if x >= 1.0:
        raise OverCritical(f"|I| = {abs(I)!r} >= I_c^s = {I_c_s!r}")
    base = consts.flux_quantum / (2.0 * math.pi * I_c_s)
    if x < 1e-8:
        return base * (1.0 + x * x / 6.0)
    return base * math.asin(x) / x


def plasma_frequency(I_c_s: float, C_J: float,
                     consts: PhysicalConstants = CODATA2018) -> float:
    """SQUID plasma frequency omega_p^s = sqrt(2 pi I_c^s / (2 C_J Phi_0))."""
    if I_c_s <= 0:
        raise SuppressedJunction("effective critical current must be positive")
    if C_J <= 0:
        raise ValueError("C_J must be positive")
    return math.sqrt(2.0 * math.pi * I_c_s / (2.0 * C_J * consts.flux_quantum))


def speed_of_light_profile(params: SquidParams, pulse: FluxPulse, x,
                           consts: PhysicalConstants = CODATA2018):
    """Local signal velocity c_s(x) = dx_cell / sqrt(L[Phi(x)] C0).

    Evaluated at the I = 0 operating point, where the inductance is
    Phi_0 / (2 pi I_c^s), so c_s scales as sqrt(cos(pi Phi/Phi_0)).
    """
    x = np.asarray(x, dtype=float)
    phi = pulse.flux(x)
    cosine = np.cos(math.pi * phi / consts.flux_quantum)
    if np.any(cosine <= _COS_FLOOR):
        raise SuppressedJunction("pulse suppresses the critical current")
    i_c_s = 2.0 * params.junction_critical_current * cosine
    inductance = consts.flux_quantum / (2.0 * math.pi * i_c_s)
    return params.cell_spacing / np.sqrt(inductance
                                         * params.ground_capacitance)


def _speed_gradient(params: SquidParams, pulse: FluxPulse, x,
                    consts: PhysicalConstants = CODATA2018):
    """Analytic d c_s / d x through the chain rule of the tanh profile."""
    x = np.asarray(x, dtype=float)
    c_s = speed_of_light_profile(params, pulse, x, consts)
    phi = pulse.flux(x)
    h = math.pi * phi / consts.flux_quantum
    dh_dx = math.pi * pulse.flux_gradient(x) / consts.flux_quantum
    # c_s ~ sqrt(cos h): dc/dx = -c/2 tan(h) dh/dx
    return -0.5 * c_s * np.tan(h) * dh_dx


def effective_metric(params: SquidParams, pulse: FluxPulse, x,
                     consts: PhysicalConstants = CODATA2018):
    """Comoving-frame metric coefficients (g_tt, g_tx, g_xx).

    ds^2 = -[c_s(x)^2 - u^2] dtau^2 + 2 u dx dtau + dx^2; g_tt changes
    sign at the horizon.
    """
    c_s = speed_of_light_profile(params, pulse, x, consts)
    u = pulse.center_velocity
    return -(c_s**2 - u**2), u, 1.0


def find_horizon(params: SquidParams, pulse: FluxPulse,
                 consts: PhysicalConstants = CODATA2018,
                 rel_tol: float = 1e-10) -> HorizonReport:
    """Locate c_s(x) = u on the pulse edge by bisection.

    The tanh profile makes c_s monotone in x, so the root is unique
    when u lies strictly between the asymptotic speeds; otherwise
    NoHorizon.  The gradient at the root comes from the analytic chain
    rule (a finite-difference fallback is exposed for cross-checks), the
    temperature from hbar |grad| / (2 pi k_B), the power from the 1D
    blackbody law.
    """
    u = pulse.center_velocity
    if u <= 0:
        raise ValueError("pulse center_velocity must be positive")
    if pulse.shape == "none" or pulse.amplitude == 0.0:
        raise NoHorizon("flat profile has no horizon")
    half_width = 25.0 / pulse.steepness
    x_lo, x_hi = -half_width, half_width
    c_lo = float(speed_of_light_profile(params, pulse, x_lo, consts))
    c_hi = float(speed_of_light_profile(params, pulse, x_hi, consts))
    c_min, c_max = min(c_lo, c_hi), max(c_lo, c_hi)
    if not c_min < u < c_max:
        raise NoHorizon(
            f"u = {u:.6g} outside the profile range ({c_min:.6g}, {c_max:.6g})")

    def f(x):
        return float(speed_of_light_profile(params, pulse, x, consts)) - u

    a, b = x_lo, x_hi
    fa = f(a)
    x_h, resid = a, abs(fa) / u
    for _ in range(300):
        mid = 0.5 * (a + b)
        fm = f(mid)
        if abs(fm) / u < resid:
            x_h, resid = mid, abs(fm) / u
        if resid <= rel_tol:
            break
        if fa * fm <= 0:
            b = mid
        else:
            a, fa = mid, fm
    if resid > rel_tol:
        raise NoHorizon(f"bisection stalled, residual {resid:.3e}")
    grad = abs(float(_speed_gradient(params, pulse, x_h, consts)))
    temperature = consts.hbar * grad / (2.0 * math.pi * consts.k_B)
    return HorizonReport(x_h, grad, temperature,
                         power_1d(temperature, consts), resid)


def finite_difference_gradient(params: SquidParams, pulse: FluxPulse,
                               x: float,
                               consts: PhysicalConstants = CODATA2018,
                               step_fraction: float = 1e-4) -> float:
    """Centered-difference |d c_s/dx| with step set by the profile width."""
    h = step_fraction / pulse.steepness
    c_p = float(speed_of_light_profile(params, pulse, x + h, consts))
    c_m = float(speed_of_light_profile(params, pulse, x - h, consts))
    return abs(c_p - c_m) / (2.0 * h)


def analogue_hawking_temperature(params: SquidParams, pulse: FluxPulse,
                                 consts: PhysicalConstants = CODATA2018) -> float:
    """T_H = hbar |d c_s/dx| / (2 pi k_B) at the horizon."""
    return find_horizon(params, pulse, consts).temperature


def analogue_spectrum(T_H: float, omega_grid,
                      consts: PhysicalConstants = CODATA2018):
    """1D thermal emission at temperature T_H.

    Returns (occupancy, flux_density) on the given angular-frequency
    grid: n(omega) = 1/(e^{hbar omega/k_B T} - 1) and the one-directional
    power density hbar omega n(omega) / (2 pi), whose integral over
    omega > 0 is the 1D blackbody power.
    """
    if T_H <= 0:
        raise ValueError("T_H must be positive")
    omega = np.asarray(omega_grid, dtype=float)
    if np.any(omega <= 0):
        raise ValueError("omega grid must be positive")
    occupancy = 1.0 / np.expm1(consts.hbar * omega / (consts.k_B * T_H))
    flux_density = consts.hbar * omega * occupancy / (2.0 * math.pi)
    return occupancy, flux_density


def squid_effective_length(L: float, L0: float) -> float:
    """Mirror displacement equivalent of a terminating SQUID: L / L0."""
    if L <= 0 or L0 <= 0:
        raise ValueError("L and L0 must be positive")
    return L / L0


def resonator_effective_length(cavity_length: float, L_unbiased: float,
                               L_biased: float) -> float:
    """Electrical length of a SQUID-array resonator under bias.

    L_eff(t) = cavity_length sqrt(L(0) / L(t)): raising the array
    inductance slows the line and stretches the resonator.
    """
    if min(cavity_length, L_unbiased, L_biased) <= 0:
        raise ValueError("all lengths/inductances must be positive")
    return cavity_length * math.sqrt(L_unbiased / L_biased)


def reference_array() -> SquidParams:
    """Shipped reference circuit for the analogue-horizon scenario.

    Constructed, not measured: high critical-current-density junctions
    (I_c / C_J ~ 1e11 A/F) push the plasma frequency to ~1.8e13 rad/s
    so that a pulse edge whose frequency scale is capped at one tenth of
    the plasma frequency still produces a ~120 mK temperature; the cell
    pitch and ground capacitance set the unbiased line speed near c/5.
    """
    return SquidParams(
        junction_critical_current=85e-6,
        junction_capacitance=0.82e-15,
        ground_capacitance=1.0e-17,
        cell_spacing=0.25e-6,
    )


def reference_pulse(params: SquidParams | None = None,
                    amplitude_fraction: float = 0.2,
                    velocity_fraction: float = 0.95,
                    frequency_safety: float = 10.0,
                    consts: PhysicalConstants = CODATA2018) -> FluxPulse:
    """Steepest admissible tanh pulse for the given array.

    The steepness is capped so the edge frequency scale u * steepness
    equals omega_p^s / frequency_safety, with omega_p^s evaluated at the
    suppressed (inside-pulse) critical current where it is lowest.
    """
    if params is None:
        params = reference_array()
    phi0 = consts.flux_quantum
    amplitude = amplitude_fraction * phi0
    i_c_min = squid_critical_current(params.junction_critical_current,
                                     amplitude, consts)
    w_p_min = plasma_frequency(i_c_min, params.junction_capacitance, consts)
    no_pulse = FluxPulse("none", flux_quantum=phi0)
    c_s0 = float(speed_of_light_profile(params, no_pulse, 0.0, consts))
    u = velocity_fraction * c_s0
    steepness = w_p_min / (frequency_safety * u)
    return FluxPulse("tanh_step", amplitude=amplitude, center_velocity=u,
                     steepness=steepness, flux_quantum=phi0)
