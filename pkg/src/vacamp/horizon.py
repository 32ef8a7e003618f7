"""Accelerated observers, exponentially red-shifted waveforms, and
black-hole thermodynamics.

The hyperbolic worldline of a uniformly accelerated observer hides half
of spacetime behind a horizon; a monochromatic wave crossing that
horizon appears exponentially red-shifted, and its two-sided power
spectrum acquires a thermal negative-frequency tail.  The same
kinematics, with the acceleration parameter replaced by the black-hole
surface-gravity rate, reproduces Hawking emission.  This module builds
the chirped waveform, computes two-sided spectra, fits the 1D thermal
form, and evaluates the Schwarzschild quantities (surface gravity,
temperature, red-shifted local temperature, entropy, 1D power,
free-fall horizon).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from .constants import CODATA2018, PhysicalConstants
from .errors import FitDiverged, InsideHorizon, InsufficientWindowWarning

__all__ = [
    "AccelerationParams",
    "BlackHole",
    "SpectrumSeries",
    "rindler_to_minkowski",
    "chirped_waveform",
    "power_spectrum",
    "unruh_spectrum",
    "planck_fit_1d",
    "detailed_balance_ratio",
    "unruh_temperature",
    "schwarzschild_radius",
    "surface_gravity",
    "hawking_temperature",
    "static_acceleration",
    "redshift_factor",
    "local_temperature",
    "bh_entropy",
    "power_1d",
    "pg_freefall_velocity",
]


@dataclass(frozen=True)
class AccelerationParams:
    """Kinematics of constant proper acceleration.

    accel_param = a/c (1/s) and vertex_distance xi = c^2/a (m) satisfy
    accel_param * xi = c by construction.
    """

    proper_accel: float
    c: float = CODATA2018.c
    accel_param: float = field(init=False)
    vertex_distance: float = field(init=False)

    def __post_init__(self):
        if self.proper_accel <= 0 or self.c <= 0:
            raise ValueError("proper_accel and c must be positive")
        object.__setattr__(self, "accel_param", self.proper_accel / self.c)
        object.__setattr__(self, "vertex_distance", self.c**2 / self.proper_accel)

    @classmethod
    def from_accel_param(cls, accel_param: float, c: float = CODATA2018.c):
        return cls(accel_param * c, c)


@dataclass(frozen=True)
class BlackHole:
    """Non-rotating, uncharged black hole of mass M (kg)."""

    mass: float

    def __post_init__(self):
        if self.mass <= 0:
            raise ValueError("mass must be positive")


@dataclass
class SpectrumSeries:
    """Two-sided power spectrum on a signed frequency grid."""

    frequencies: np.ndarray
    power: np.ndarray
    window: str
    fitted_temperature: float | None = None
    fit_residual: float | None = None
    insufficient_window: bool = False

    def __post_init__(self):
        self.frequencies = np.asarray(self.frequencies, dtype=float)
        self.power = np.asarray(self.power, dtype=float)
        if np.any(np.diff(self.frequencies) <= 0):
            raise ValueError("frequency grid must be strictly increasing")
        if np.any(self.power < 0):
            raise ValueError("power must be nonnegative")

    def interp_power(self, omega, log_space: bool = True):
        """Interpolate the power at arbitrary frequencies.

        Thermal tails vary exponentially between bins, so interpolation
        happens in log power by default (zeros floored at 1e-300).
        """
        if log_space:
            logp = np.log(np.maximum(self.power, 1e-300))
            return np.exp(np.interp(omega, self.frequencies, logp))
        return np.interp(omega, self.frequencies, self.power)


def rindler_to_minkowski(tau, params: AccelerationParams):
    """Worldline (ct, x) of the accelerated observer at proper time tau.

    ct = xi sinh(accel_param tau), x = xi cosh(accel_param tau): a
    hyperbola x^2 - (ct)^2 = xi^2 asymptotic to the lightcone.
    """
    tau = np.asarray(tau, dtype=float)
    xi = params.vertex_distance
    arg = params.accel_param * tau
    return xi * np.sinh(arg), xi * np.cosh(arg)


def chirped_waveform(Omega: float, params: AccelerationParams, tau_grid):
    """Plane wave of lab frequency Omega as seen on the accelerated worldline.

    exp[i (Omega/alpha) e^{-alpha tau}]: unit-modulus, with instantaneous
    frequency Omega e^{-alpha tau} falling by e every 1/alpha of proper
    time.
    """
    tau = np.asarray(tau_grid, dtype=float)
    a = params.accel_param
    return np.exp(1j * (Omega / a) * np.exp(-a * tau))


def _window_values(n: int, window) -> np.ndarray:
    """Window samples for a descriptor.

    Supported: "none", "hann", and ("edge_taper", left_frac, right_frac)
    which is flat with half-cosine tapers over the given edge fractions.
    """
    if window == "none":
        return np.ones(n)
    if window == "hann":
        return np.hanning(n)
    if isinstance(window, (tuple, list)) and window and window[0] == "edge_taper":
        _, left_frac, right_frac = window
        w = np.ones(n)
        n_l = int(round(left_frac * n))
        n_r = int(round(right_frac * n))
        if n_l > 0:
            x = np.arange(n_l) / n_l
            w[:n_l] = 0.5 * (1.0 - np.cos(np.pi * x))
        if n_r > 0:
            x = np.arange(n_r) / n_r
            w[n - n_r:] = 0.5 * (1.0 + np.cos(np.pi * x))
        return w
    raise ValueError(f"unknown window descriptor {window!r}")


def _window_name(window) -> str:
    if isinstance(window, str):
        return window
    return ":".join(str(v) for v in window)


def power_spectrum(samples, dt: float, window="hann", *,
                   t0: float = 0.0, subtract=None,
                   amplitude_correction=None, pad_factor: int = 1,
                   min_span: float | None = None) -> SpectrumSeries:
    """Two-sided power spectrum under the e^{+i omega tau} transform.

    P(omega) = |dt sum_j x_j w_j e^{+i omega tau_j}|^2 on the FFT grid
    (tau_j = t0 + j dt), so a pure e^{-i omega0 tau} tone peaks at
    +omega0 and absorption-like content appears at negative frequencies.

    subtract: scalar or per-sample array removed from the samples before
    windowing (e.g. the late-time asymptote of a chirp, whose spectral
    delta would otherwise leak across the tiny negative-frequency tail).
    amplitude_correction: optional callable omega -> complex amplitude
    added to the transform before squaring; used to restore, in closed
    form, the continuum content of whatever `subtract` removed and of
    the tails beyond the grid.
    pad_factor: zero-padding multiple for spectral interpolation.
    min_span: if given and N dt < min_span, the series is flagged and an
    InsufficientWindowWarning is emitted (not fatal).
    """
    x = np.asarray(samples, dtype=complex)
    n = x.size
    if n < 2:
        raise ValueError("need at least 2 samples")
    if dt <= 0:
        raise ValueError("dt must be positive")
    flagged = False
    if min_span is not None and n * dt < min_span:
        flagged = True
        warnings.warn(
            f"grid spans {n * dt:.3g}, below the recommended {min_span:.3g}",
            InsufficientWindowWarning)
    if subtract is not None:
        x = x - subtract
    x = x * _window_values(n, window)
    n_fft = int(pad_factor) * n
    # ifft carries the e^{+i} kernel; scale back to a plain sum times dt
    amp = np.fft.ifft(x, n=n_fft) * n_fft * dt
    freqs = 2.0 * np.pi * np.fft.fftfreq(n_fft, d=dt)
    if t0 != 0.0 or amplitude_correction is not None:
        amp = amp * np.exp(1j * freqs * t0)
    if amplitude_correction is not None:
        nonzero = freqs != 0.0
        amp = np.where(nonzero, amp + amplitude_correction(freqs), 0.0)
    order = np.argsort(freqs)
    series = SpectrumSeries(freqs[order], np.abs(amp[order]) ** 2,
                            _window_name(window))
    series.insufficient_window = flagged
    return series


def _exponential_chirp_spectrum(theta, tau, rate: float, tail_coeff: float,
                                step_center: float, step_width: float,
                                taper_frac: float, pad_factor: int,
                                min_span: float | None) -> SpectrumSeries:
    """Spectrum of e^{i theta(tau)} where theta decays like
    tail_coeff e^{-rate tau}.

    The waveform tends to 1, so its transform carries a DC line next to
    an exponentially small negative-frequency tail.  A hard or tapered
    subtraction of the constant would splatter across that tail; instead
    a smooth unit step g(tau) (Gaussian CDF centered at step_center,
    width step_width) is subtracted on the grid and its exact continuum
    transform (i/omega) e^{i omega tc - omega^2 s^2/2} is restored
    analytically, together with the closed-form late tail of
    (e^{i theta} - 1) beyond the grid.  The early fast-oscillating edge
    only needs an ordinary taper: its splatter is suppressed by the
    huge local chirp rate.
    """
    from scipy.special import ndtr

    dt = tau[1] - tau[0]
    t_end = tau[-1] + dt
    g = ndtr((tau - step_center) / step_width)
    samples = np.exp(1j * theta)

    def correction(omega):
        # continuum transform of the subtracted step, omega != 0
        w = np.where(omega == 0.0, 1.0, omega)
        step = (1j / w) * np.exp(1j * w * step_center
                                 - 0.5 * (step_width * w) ** 2)
        # int_{t_end}^inf i C e^{-rate tau} e^{i omega tau} d tau
        tail = (1j * tail_coeff * np.exp(-(rate - 1j * w) * t_end)
                / (rate - 1j * w))
        return step + tail

    return power_spectrum(samples, dt, window=("edge_taper", taper_frac, 0.0),
                          t0=float(tau[0]), subtract=g,
                          amplitude_correction=correction,
                          pad_factor=pad_factor, min_span=min_span)


def unruh_spectrum(Omega: float | None, params: AccelerationParams, *,
                   n_samples: int = 2**16, span_before: float = 8.0,
                   span_after: float = 18.0, taper: float = 2.0,
                   pad_factor: int = 4) -> SpectrumSeries:
    """Spectrum of the red-shifted waveform seen by an accelerated observer.

    Samples the chirp on tau in [-span_before, span_after] / alpha (all
    spans in units of 1/alpha).  Omega defaults to alpha, placing the
    sweep through the thermal band near tau = 0, well inside the flat
    part of the window.  Defaults resolve the band |omega|/alpha in
    [0.5, 3] to well under a percent.
    """
    a = params.accel_param
    if Omega is None:
        Omega = a
    tau = np.linspace(-span_before / a, span_after / a, n_samples,
                      endpoint=False)
    dt = tau[1] - tau[0]
    # keep the largest retained instantaneous frequency under ~half Nyquist
    omega_max = Omega / a * math.exp(span_before) * a
    if math.pi / dt < 2.0 * omega_max:
        raise ValueError(
            "grid too coarse for the early-time chirp; increase n_samples "
            "or reduce span_before")
    theta = (Omega / a) * np.exp(-a * tau)
    frac = taper / (span_before + span_after)
    return _exponential_chirp_spectrum(
        theta, tau, rate=a, tail_coeff=Omega / a,
        step_center=6.0 / a, step_width=2.0 / a,
        taper_frac=frac, pad_factor=pad_factor, min_span=5.0 / a)


def unruh_temperature(params: AccelerationParams,
                      consts: PhysicalConstants = CODATA2018) -> float:
    """T_U = hbar (a/c) / (2 pi k_B)."""
    return consts.hbar * params.accel_param / (2.0 * math.pi * consts.k_B)


def detailed_balance_ratio(omega01: float, T: float,
                           consts: PhysicalConstants = CODATA2018) -> float:
    """Absorption/emission rate ratio exp(-hbar omega01 / k_B T)."""
    if T <= 0:
        raise ValueError("T must be positive")
    return math.exp(-consts.hbar * omega01 / (consts.k_B * T))


def planck_fit_1d(spectrum: SpectrumSeries, band: tuple[float, float],
                  consts: PhysicalConstants = CODATA2018) -> tuple[float, float]:
    """Fit the negative-frequency tail to the 1D thermal form.

    Least squares in log space of ln P(-omega) against
    ln[A / omega / (e^{hbar omega / k_B T} - 1)] over omega in `band`
    (positive numbers naming the mirrored negative frequencies), with
    the amplitude A a nuisance parameter.  Returns (T, rms log
    residual) and stamps them onto the spectrum.
    """
    w_lo, w_hi = band
    if not 0 < w_lo < w_hi:
        raise ValueError("band must satisfy 0 < lo < hi")
    freqs, power = spectrum.frequencies, spectrum.power
    mask = (freqs <= -w_lo) & (freqs >= -w_hi)
    if np.count_nonzero(mask) < 4:
        raise ValueError("fewer than 4 spectral points in the fit band")
    omega = -freqs[mask]
    p = power[mask]
    if np.any(p <= 0):
        raise FitDiverged("nonpositive power inside the fit band")
    y = np.log(p) + np.log(omega)

    x_scale = consts.hbar / consts.k_B

    def log_expm1(x):
        # ln(e^x - 1), overflow-safe: x + ln(1 - e^{-x}) for large x
        x = np.asarray(x, dtype=float)
        return np.where(x > 30.0, x + np.log1p(-np.exp(-np.minimum(x, 700.0))),
                        np.log(np.expm1(np.minimum(x, 30.0))))

    def cost(log_T):
        t = math.exp(log_T)
        model = -log_expm1(x_scale * omega / t)
        resid = y - model
        resid = resid - resid.mean()  # free amplitude
        return float(np.dot(resid, resid))

    t_max = 10.0 * x_scale * w_hi
    # initial guess from the detailed-balance slope of the tail alone
    slope = np.polyfit(omega, np.log(p), 1)[0]
    t_guess = x_scale / max(-slope, 1e-300) if slope < 0 else 0.1 * t_max
    t_guess = min(max(t_guess, 1e-6 * t_max), t_max)
    res = minimize_scalar(cost,
                          bounds=(math.log(1e-8 * t_max), math.log(t_max)),
                          method="bounded",
                          options={"xatol": 1e-13})
    temperature = math.exp(res.x)
    if not res.success or temperature >= 0.999 * t_max:
        raise FitDiverged(
            f"fit left the admissible range (T = {temperature:.3e})")
    model = -log_expm1(x_scale * omega / temperature)
    resid = y - model
    resid -= resid.mean()
    rms = float(np.sqrt(np.mean(resid**2)))
    spectrum.fitted_temperature = temperature
    spectrum.fit_residual = rms
    return temperature, rms


# ---------------------------------------------------------------------------
# Schwarzschild black hole


def schwarzschild_radius(bh: BlackHole,
                         consts: PhysicalConstants = CODATA2018) -> float:
    """r_s = 2 G M / c^2."""
    return 2.0 * consts.G * bh.mass / consts.c**2


def surface_gravity(bh: BlackHole,
                    consts: PhysicalConstants = CODATA2018) -> tuple[float, float]:
    """(kappa, gamma): kappa = c^4 / (4 G M) and its rate gamma = kappa / c.

    kappa is the force per unit mass, applied from infinity, required to
    hold a test mass at the horizon.
    """
    kappa = consts.c**4 / (4.0 * consts.G * bh.mass)
    return kappa, kappa / consts.c


def hawking_temperature(bh: BlackHole,
                        consts: PhysicalConstants = CODATA2018) -> float:
    """T_H = hbar gamma / (2 pi k_B), gamma = kappa / c."""
    _, gamma = surface_gravity(bh, consts)
    return consts.hbar * gamma / (2.0 * math.pi * consts.k_B)


def redshift_factor(bh: BlackHole, r: float,
                    consts: PhysicalConstants = CODATA2018) -> float:
    """V(r) = sqrt(1 - r_s/r) for r > r_s."""
    r_s = schwarzschild_radius(bh, consts)
    if r <= r_s:
        raise InsideHorizon(f"r = {r!r} <= r_s = {r_s!r}")
    return math.sqrt(1.0 - r_s / r)


def static_acceleration(bh: BlackHole, r: float,
                        consts: PhysicalConstants = CODATA2018) -> float:
    """Proper acceleration of a static observer at radius r.

    a(r) = G M / (r^2 sqrt(1 - r_s/r)); Newtonian far away, divergent at
    the horizon.
    """
    v = redshift_factor(bh, r, consts)
    return consts.G * bh.mass / (r**2 * v)


def local_temperature(bh: BlackHole, r: float,
                      consts: PhysicalConstants = CODATA2018) -> float:
    """Blue-shifted temperature T(r) = T_H / V(r) seen by a static observer."""
    return hawking_temperature(bh, consts) / redshift_factor(bh, r, consts)


def bh_entropy(bh: BlackHole,
               consts: PhysicalConstants = CODATA2018) -> float:
    """Horizon-area entropy S = k_B c^3 A / (4 hbar G), A = 4 pi r_s^2."""
    r_s = schwarzschild_radius(bh, consts)
    area = 4.0 * math.pi * r_s**2
    return consts.k_B * consts.c**3 * area / (4.0 * consts.hbar * consts.G)


def power_1d(T: float, consts: PhysicalConstants = CODATA2018) -> float:
    """Unidirectional 1D blackbody power pi k_B^2 T^2 / (12 hbar)."""
    if T < 0:
        raise ValueError("T must be >= 0")
    return math.pi * consts.k_B**2 * T**2 / (12.0 * consts.hbar)


def pg_freefall_velocity(bh: BlackHole, r: float,
                         consts: PhysicalConstants = CODATA2018) -> float:
    """Free-fall velocity from rest at infinity, u(r) = c sqrt(r_s/r).

    In horizon-regular (Painleve-Gullstrand) coordinates the horizon
    sits exactly where u(r) reaches the vacuum speed of light.
    """
    if r <= 0:
        raise ValueError("r must be positive")
    return consts.c * math.sqrt(schwarzschild_radius(bh, consts) / r)
