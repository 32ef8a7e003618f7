"""Time-dependent harmonic oscillator mode functions.

Integrates f''(t) + omega(t)^2 f(t) = 0 from positive-frequency initial
data, tracks the conserved inner-product norm, and projects the final
state onto the outgoing positive/negative frequency pair to obtain the
Bogoliubov coefficients of an arbitrary frequency sweep.  Also carries
the classical parametrically-pumped pendulum solution used as the
textbook warm-up for the quantum case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp

from .constants import CODATA2018
from .errors import NormDrift, StepSizeUnderflow
from .symplectic import BogoliubovMap

__all__ = [
    "FrequencyProfile",
    "ModeTrajectory",
    "positive_frequency_ic",
    "kg_inner",
    "evolve_mode",
    "extract_bogoliubov",
    "parametric_swing",
]

STANDARD_GRAVITY = 9.80665  # m/s^2

DEFAULT_ODE_TOL = 1e-10


@dataclass(frozen=True)
class FrequencyProfile:
    """omega(t) specification for the mode equation.

    kinds:
      constant        omega(t) = omega_in
      sudden_step     omega^2 ramps between omega_in^2 and omega_out^2
                      through a tanh of width `step_width` (default
                      1e-4 / max(omega)); approximates a discontinuity
                      while keeping the ODE right-hand side smooth
      tanh_ramp       same tanh form with user `ramp_time`
      sinusoidal_pump omega(t) = omega_in (1 + pump_depth sin(pump_frequency t))
    """

    kind: str
    omega_in: float
    omega_out: float = 0.0
    ramp_time: float = 0.0
    pump_depth: float = 0.0
    pump_frequency: float = 0.0
    step_width: float = 0.0

    def __post_init__(self):
        if self.omega_in <= 0:
            raise ValueError("omega_in must be positive")
        if self.kind == "constant":
            object.__setattr__(self, "omega_out", self.omega_in)
        elif self.kind in ("sudden_step", "tanh_ramp"):
            if self.omega_out <= 0:
                raise ValueError("omega_out must be positive")
            if self.kind == "tanh_ramp" and self.ramp_time <= 0:
                raise ValueError("tanh_ramp requires ramp_time > 0")
            if self.kind == "sudden_step" and self.step_width <= 0:
                width = 1e-4 / max(self.omega_in, self.omega_out)
                object.__setattr__(self, "step_width", width)
        elif self.kind == "sinusoidal_pump":
            if not 0.0 <= self.pump_depth < 1.0:
                raise ValueError("pump_depth must lie in [0, 1)")
            if self.pump_frequency <= 0:
                raise ValueError("pump_frequency must be positive")
            object.__setattr__(self, "omega_out", self.omega_in)
        else:
            raise ValueError(f"unknown profile kind {self.kind!r}")

    def _tanh_width(self) -> float:
        return self.ramp_time if self.kind == "tanh_ramp" else self.step_width

    def omega_sq(self, t):
        """omega(t)^2, vectorized over t."""
        t = np.asarray(t, dtype=float)
        if self.kind == "constant":
            return np.full_like(t, self.omega_in**2)
        if self.kind in ("sudden_step", "tanh_ramp"):
            w_in2 = self.omega_in**2
            w_out2 = self.omega_out**2
            s = 0.5 * (1.0 + np.tanh(t / self._tanh_width()))
            return w_in2 + (w_out2 - w_in2) * s
        return (self.omega_in * (1.0 + self.pump_depth
                                 * np.sin(self.pump_frequency * t))) ** 2

    def omega(self, t):
        return np.sqrt(self.omega_sq(t))


@dataclass
class ModeTrajectory:
    """Integrated mode function at the solver's accepted steps."""

    times: np.ndarray
    f: np.ndarray
    fdot: np.ndarray
    mass: float
    hbar: float
    kg_norm_history: np.ndarray
    profile: FrequencyProfile = field(repr=False)
    tol: float = DEFAULT_ODE_TOL


def positive_frequency_ic(omega_in: float, m: float,
                          hbar: float = CODATA2018.hbar) -> tuple[complex, complex]:
    """Initial data selecting the positive-frequency solution.

    f(t0) = x_zp = sqrt(hbar / 2 m omega_in), f'(t0) = -i omega_in f(t0);
    normalized so the inner-product norm is +1 (the conjugate pair
    carries -1).
    """
    if omega_in <= 0 or m <= 0:
        raise ValueError("omega_in and m must be positive")
    x_zp = math.sqrt(hbar / (2.0 * m * omega_in))
    return complex(x_zp), -1j * omega_in * x_zp


def kg_inner(f: complex, fdot: complex, g: complex, gdot: complex,
             m: float, hbar: float = CODATA2018.hbar) -> complex:
    """Pointwise inner product of two mode-function values.

    <f, g> = (i m / hbar) [conj(f) gdot - g conj(fdot)]; constant in time
    when f and g solve the same oscillator equation.
    """
    return 1j * m / hbar * (np.conjugate(f) * gdot - g * np.conjugate(fdot))


def evolve_mode(profile: FrequencyProfile, t0: float, t1: float, m: float,
                tol: float = DEFAULT_ODE_TOL,
                hbar: float = CODATA2018.hbar) -> ModeTrajectory:
    """Integrate the mode equation from positive-frequency data at t0.

    Adaptive high-order Runge-Kutta on the complex pair (f, f'),
    internally rescaled by x_zp so tolerances are relative to unit
    amplitude.  The conserved norm <f, f> is recorded at every accepted
    step; drift beyond 10 * tol * (step count) raises NormDrift.
    """
    if not t0 < t1:
        raise ValueError("need t0 < t1")
    if m <= 0:
        raise ValueError("m must be positive")
    f0, fdot0 = positive_frequency_ic(float(profile.omega(t0)), m, hbar)
    x_zp = f0.real

    def rhs(t, y):
        return np.array([y[1], -profile.omega_sq(t) * y[0]], dtype=complex)

    sol = solve_ivp(rhs, (t0, t1),
                    np.array([f0 / x_zp, fdot0 / x_zp], dtype=complex),
                    method="DOP853", rtol=tol, atol=tol, dense_output=False)
    if not sol.success:
        raise StepSizeUnderflow(f"integrator failed: {sol.message}")

    f = sol.y[0] * x_zp
    fdot = sol.y[1] * x_zp
    norms = np.real(kg_inner(f, fdot, f, fdot, m, hbar))
    traj = ModeTrajectory(sol.t, f, fdot, m, hbar, norms, profile, tol)

    budget = 10.0 * tol * max(len(sol.t), 1)
    drift = float(np.max(np.abs(norms - 1.0)))
    if drift > budget:
        raise NormDrift(f"norm drift {drift:.3e} exceeds budget {budget:.3e}")
    return traj


def extract_bogoliubov(traj: ModeTrajectory, omega_out: float,
                       residual_tol: float = 1e-6) -> BogoliubovMap:
    """Project the final state onto the outgoing frequency basis.

    With u_out(t) = x_zp_out e^{-i omega_out t} (phase referenced to
    t = 0), alpha = <u_out, f> and beta = -<conj(u_out), f> evaluated at
    the last stored step.  Requires the profile to be constant at
    omega_out there.
    """
    if omega_out <= 0:
        raise ValueError("omega_out must be positive")
    w_end = float(traj.profile.omega(traj.times[-1]))
    if abs(w_end - omega_out) > 1e-3 * omega_out:
        raise ValueError(
            f"profile not settled at omega_out: omega(t1) = {w_end!r}")

    t_end = traj.times[-1]
    f_end, fdot_end = traj.f[-1], traj.fdot[-1]
    x_out = math.sqrt(traj.hbar / (2.0 * traj.mass * omega_out))
    u = x_out * np.exp(-1j * omega_out * t_end)
    udot = -1j * omega_out * u
    alpha = complex(kg_inner(u, udot, f_end, fdot_end, traj.mass, traj.hbar))
    beta = -complex(kg_inner(np.conjugate(u), np.conjugate(udot),
                             f_end, fdot_end, traj.mass, traj.hbar))
    return BogoliubovMap(alpha, beta, residual_tol)


def parametric_swing(theta0: float, L0: float, m: float, l: float,
                     epsilon: float, t) -> np.ndarray:
    """Pendulum amplitude under center-of-mass pumping at twice omega_s.

    theta(t) = theta0 e^{eps t/2} cos(w_s t) + L0/(m w_s l) e^{-eps t/2} sin(w_s t)
    with w_s = sqrt(g / l): the in-phase component grows exponentially
    while the out-of-phase component is damped.  epsilon = 0 recovers the
    plain pendulum.
    """
    if l <= 0 or m <= 0:
        raise ValueError("m and l must be positive")
    t = np.asarray(t, dtype=float)
    w_s = math.sqrt(STANDARD_GRAVITY / l)
    return (theta0 * np.exp(epsilon * t / 2.0) * np.cos(w_s * t)
            + L0 / (m * w_s * l) * np.exp(-epsilon * t / 2.0) * np.sin(w_s * t))
