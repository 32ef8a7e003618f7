"""Dynamical Casimir effect in a 1D cavity with one moving mirror.

Works in natural units (c = 1) throughout.  One mirror sits at x = 0,
the other follows z(t) with z(t) = z0 for t <= 0.  The field modes are
generated by the solution R(u) of the functional equation

    R(t + z(t)) - R(t - z(t)) = 2,

solved here by marching along characteristics: each grid time assigns
the value at t + z(t) from the (already known) value at t - z(t), with
monotone cubic interpolation between assigned points.  Projecting the
resulting modes onto the static-cavity basis at a time T when the
mirror has stopped yields the Bogoliubov matrices and output photon
numbers.  The exponentially receding mirror is handled separately by
exact ray tracing, which reduces it to the same red-shift spectrum
machinery as the accelerated-observer case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import PchipInterpolator
from scipy.special import lambertw

from .constants import NATURAL
from .errors import (NonMonotone, OutOfGrid, ResidualExceeded,
                     UnitarityLoss)
from .horizon import (SpectrumSeries, _exponential_chirp_spectrum,
                      planck_fit_1d)
from .symplectic import BogoliubovMap, dpa_evolution

__all__ = [
    "MirrorTrajectory",
    "RFunction",
    "BogoliubovMatrices",
    "solve_moore",
    "cavity_mode",
    "dce_bogoliubov",
    "photon_number_out",
    "single_mode_dce",
    "receding_mirror_spectrum",
    "reflected_ray_phase",
    "dce_threshold",
]

DEFAULT_GRID_STEP_FRACTION = 1.0 / 512.0


@dataclass(frozen=True)
class MirrorTrajectory:
    """Boundary motion z(t); static (z = z0) for t <= 0.

    kinds:
      static      z(t) = z0.
      sinusoidal  z(t) = z0 [1 - eps env(t) sin(drive_frequency t)].
                  The envelope env(t) ramps up/down with half-cosine
                  windows of `ramp_periods` drive periods so the mirror
                  is strictly static outside [0, t_drive + t_ramp]; the
                  ramps are arranged to integrate to exactly `t_drive`
                  of equivalent full-amplitude drive.
      receding    z(t) = -t - A exp(-2 kappa t) + B for t > 0, with
                  B = A so z is continuous at t = 0.  Requires
                  kappa A < 1 (sub-luminal start).
    """

    kind: str
    z0: float = 1.0
    epsilon: float = 0.0
    drive_frequency: float = 0.0
    t_drive: float = 0.0
    ramp_periods: float = 1.0
    A: float = 0.0
    B: float = field(init=False, default=0.0)
    kappa: float = 0.0

    def __post_init__(self):
        if self.z0 <= 0:
            raise ValueError("z0 must be positive")
        if self.kind == "static":
            pass
        elif self.kind == "sinusoidal":
            if not 0.0 <= self.epsilon < 0.5:
                raise ValueError("epsilon must lie in [0, 0.5)")
            if self.drive_frequency <= 0:
                raise ValueError("drive_frequency must be positive")
            if self.t_drive < 0:
                raise ValueError("t_drive must be >= 0")
            if self.epsilon > 0 and 0 < self.t_drive < \
                    self.ramp_periods * 2.0 * math.pi / self.drive_frequency:
                raise ValueError("t_drive must cover at least the ramp time")
            vmax = self.z0 * self.epsilon * self.drive_frequency
            if vmax >= 1.0:
                raise ValueError(
                    f"peak mirror speed eps z0 w_d = {vmax:.3g} >= 1 (c = 1)")
        elif self.kind == "receding":
            if self.A <= 0 or self.kappa <= 0:
                raise ValueError("A and kappa must be positive")
            if self.kappa * self.A >= 1.0:
                raise ValueError("kappa A >= 1 gives a super-luminal start")
        else:
            raise ValueError(f"unknown trajectory kind {self.kind!r}")
        object.__setattr__(self, "B", self.A)

    @property
    def ramp_time(self) -> float:
        if self.kind != "sinusoidal" or self.epsilon == 0.0 \
                or self.t_drive == 0.0:
            return 0.0
        return self.ramp_periods * 2.0 * math.pi / self.drive_frequency

    @property
    def t_stop(self) -> float:
        """Earliest time after which the mirror is static again."""
        if self.kind == "sinusoidal" and self.epsilon and self.t_drive:
            return self.t_drive + self.ramp_time
        if self.kind == "receding":
            return math.inf
        return 0.0

    def _envelope(self, t):
        t = np.asarray(t, dtype=float)
        if self.t_drive == 0.0:
            return np.zeros_like(t)
        t_r = self.ramp_time
        t_end = self.t_drive + t_r
        env = np.zeros_like(t)
        if t_r == 0.0:
            np.copyto(env, 1.0, where=(t > 0) & (t < self.t_drive))
            return env
        rising = (t > 0) & (t < t_r)
        flat = (t >= t_r) & (t <= t_end - t_r)
        falling = (t > t_end - t_r) & (t < t_end)
        env[rising] = 0.5 * (1.0 - np.cos(np.pi * t[rising] / t_r))
        env[flat] = 1.0
        env[falling] = 0.5 * (1.0 - np.cos(np.pi * (t_end - t[falling]) / t_r))
        return env

    def position(self, t):
        t = np.asarray(t, dtype=float)
        if self.kind == "static":
            return np.full_like(t, self.z0)
        if self.kind == "sinusoidal":
            z = self.z0 * (1.0 - self.epsilon * self._envelope(t)
                           * np.sin(self.drive_frequency * t))
            return z
        t_pos = np.maximum(t, 0.0)
        return np.where(t > 0,
                        -t_pos - self.A * np.exp(-2.0 * self.kappa * t_pos)
                        + self.B,
                        0.0)


@dataclass
class RFunction:
    """Grid solution of the characteristic map R(u).

    Piecewise-monotone cubic between assigned knots; `exact_linear` marks
    the static case where R(u) = u / z0 is evaluated in closed form.
    """

    u: np.ndarray
    r: np.ndarray
    z0: float
    interpolation_order: int = 3
    exact_linear: bool = False
    _interp: PchipInterpolator | None = field(default=None, repr=False)
    _deriv: PchipInterpolator | None = field(default=None, repr=False)

    def __post_init__(self):
        if not self.exact_linear:
            self._interp = PchipInterpolator(self.u, self.r, extrapolate=False)
            self._deriv = self._interp.derivative()

    @property
    def u_min(self) -> float:
        return float(self.u[0])

    @property
    def u_max(self) -> float:
        return float(self.u[-1])

    def _check_range(self, u):
        if np.any(u < self.u_min) or np.any(u > self.u_max):
            raise OutOfGrid(
                f"u outside solved range [{self.u_min:.6g}, {self.u_max:.6g}]")

    def __call__(self, u):
        u = np.asarray(u, dtype=float)
        self._check_range(u)
        if self.exact_linear:
            return u / self.z0
        return self._interp(u)

    def derivative(self, u):
        u = np.asarray(u, dtype=float)
        self._check_range(u)
        if self.exact_linear:
            return np.full_like(u, 1.0 / self.z0)
        return self._deriv(u)

    def residual(self, traj: MirrorTrajectory, t_grid) -> np.ndarray:
        """|R(t + z(t)) - R(t - z(t)) - 2| on an arbitrary time grid."""
        t = np.asarray(t_grid, dtype=float)
        z = traj.position(t)
        return np.abs(self(t + z) - self(t - z) - 2.0)


def solve_moore(traj: MirrorTrajectory, T: float,
                grid_step: float | None = None, tol: float = 1e-8) -> RFunction:
    """March the characteristic map up to time T.

    Seeds R(u) = u/z0 on the static region, then for each grid time t
    assigns R(t + z(t)) = R(t - z(t)) + 2.  Reads lag writes by about
    two light-crossing times, so the assignment proceeds in blocks that
    only ever interpolate into already-settled data.  The residual is
    verified on a twice-finer grid; exceeding `tol` raises.
    """
    if traj.kind == "receding":
        raise ValueError("receding trajectories are handled by ray tracing, "
                         "not the cavity solver")
    if T <= 0:
        raise ValueError("T must be positive")
    z0 = traj.z0
    if grid_step is None:
        grid_step = z0 * DEFAULT_GRID_STEP_FRACTION

    if traj.kind == "static" or traj.epsilon == 0.0:
        pad = 4.0 * grid_step
        n = max(int(math.ceil((T + 2.0 * z0 + 2.0 * pad) / grid_step)), 8)
        u = np.linspace(-z0 - pad, T + z0 + pad, n)
        return RFunction(u, u / z0, z0, exact_linear=True)

    n_steps = int(math.ceil(T / grid_step))
    t_march = (np.arange(n_steps) + 1.0) * (T / n_steps)
    z_march = traj.position(t_march)
    z_min = float(np.min(z_march))
    if z_min <= 0:
        raise ValueError("trajectory reaches z <= 0")

    # seed: exact static solution, one light-crossing behind the start
    n_seed = max(int(math.ceil(2.0 * z0 / grid_step)), 8)
    u_seed = np.linspace(-z0 - grid_step, z0, n_seed)
    knots_u = [u_seed]
    knots_r = [u_seed / z0]

    block = max(int(math.floor(z_min / (T / n_steps))), 1)
    interp = PchipInterpolator(np.concatenate(knots_u),
                               np.concatenate(knots_r), extrapolate=False)
    for start in range(0, n_steps, block):
        sl = slice(start, min(start + block, n_steps))
        t_b, z_b = t_march[sl], z_march[sl]
        u_read = t_b - z_b
        u_write = t_b + z_b
        r_new = interp(u_read) + 2.0
        if np.any(np.isnan(r_new)):
            raise OutOfGrid("characteristic read outside the known grid")
        knots_u.append(u_write)
        knots_r.append(r_new)
        u_all = np.concatenate(knots_u)
        r_all = np.concatenate(knots_r)
        if np.any(np.diff(u_all) <= 0) or np.any(np.diff(r_all) <= 0):
            raise NonMonotone("assigned R values are not strictly increasing")
        interp = PchipInterpolator(u_all, r_all, extrapolate=False)

    rfunc = RFunction(np.concatenate(knots_u), np.concatenate(knots_r), z0)

    t_fine = np.linspace(0.5 * (T / n_steps), T - 0.5 * (T / n_steps),
                         2 * n_steps)
    res = rfunc.residual(traj, t_fine)
    worst = float(np.max(res)) if res.size else 0.0
    if worst > tol:
        raise ResidualExceeded(
            f"Moore residual {worst:.3e} > tol {tol:.3e}; refine grid_step")
    return rfunc


def cavity_mode(R: RFunction, n: int, x, t):
    """Field mode phi_n(x, t) built from the characteristic solution.

    (4 pi n)^{-1/2} [e^{-i pi n R(t+x)} - e^{-i pi n R(t-x)}]; vanishes
    identically at x = 0 and, up to the solver residual, at the moving
    mirror.
    """
    if n < 1:
        raise ValueError("mode index n must be >= 1")
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("x must be >= 0")
    pref = 1.0 / math.sqrt(4.0 * math.pi * n)
    return pref * (np.exp(-1j * math.pi * n * R(t + x))
                   - np.exp(-1j * math.pi * n * R(t - x)))


def _cavity_mode_and_rate(R: RFunction, n_modes: int, x, t):
    """phi_n and d(phi_n)/dt for n = 1..n_modes, vectorized over x."""
    x = np.asarray(x, dtype=float)
    rp, rm = R(t + x), R(t - x)
    dp, dm = R.derivative(t + x), R.derivative(t - x)
    n = np.arange(1, n_modes + 1)[:, None]
    pref = 1.0 / np.sqrt(4.0 * math.pi * n)
    ep = np.exp(-1j * math.pi * n * rp[None, :])
    em = np.exp(-1j * math.pi * n * rm[None, :])
    phi = pref * (ep - em)
    phidot = pref * (-1j * math.pi * n) * (dp[None, :] * ep - dm[None, :] * em)
    return phi, phidot


@dataclass
class BogoliubovMatrices:
    """Mode-mixing matrices onto the static out basis at time T.

    alpha[n-1, m-1] and beta[n-1, m-1] connect nonstationary mode n to
    static mode m; completeness requires sum_n (|alpha_nm|^2 -
    |beta_nm|^2) = 1 per out mode m, degraded near the cutoff.
    """

    alpha: np.ndarray
    beta: np.ndarray
    evaluation_time: float
    z0: float

    @property
    def n_max(self) -> int:
        return self.alpha.shape[0]

    def unitarity_deviations(self) -> np.ndarray:
        sums = np.sum(np.abs(self.alpha) ** 2 - np.abs(self.beta) ** 2, axis=0)
        return np.abs(sums - 1.0)

    def cutoff_loss(self) -> float:
        """Worst completeness deficit over the trusted lower half of modes."""
        dev = self.unitarity_deviations()
        return float(np.max(dev[: max(self.n_max // 2, 1)]))


def _composite_gauss_legendre(a: float, b: float, n_intervals: int,
                              points_per_interval: int):
    nodes, weights = np.polynomial.legendre.leggauss(points_per_interval)
    edges = np.linspace(a, b, n_intervals + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])[:, None]
    half = 0.5 * (edges[1:] - edges[:-1])[:, None]
    x = (mid + half * nodes[None, :]).ravel()
    w = (half * weights[None, :]).ravel()
    return x, w


def dce_bogoliubov(R: RFunction, traj: MirrorTrajectory, T: float,
                   n_max: int = 32, quad_points: int = 16,
                   unitarity_tol: float = 1e-3) -> BogoliubovMatrices:
    """Project the evolved modes onto the static basis at time T.

    Spatial inner-product quadrature over [0, z0] (composite
    Gauss-Legendre, `quad_points` per half-wavelength of the highest
    retained mode); requires the mirror to be static for t >= T.
    Raises UnitarityLoss when the completeness residual over the lower
    half of the out modes exceeds `unitarity_tol`.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if T < traj.t_stop:
        raise ValueError(f"mirror still moving at T = {T!r} "
                         f"(static after {traj.t_stop!r})")
    z0 = traj.z0
    x, w = _composite_gauss_legendre(0.0, z0, n_max, quad_points)

    phi, phidot = _cavity_mode_and_rate(R, n_max, x, T)

    m = np.arange(1, n_max + 1)[:, None]
    omega_m = math.pi * m / z0
    # conj(psi_m) and its time derivative factor at time T
    psi_bar = (-1j / np.sqrt(math.pi * m)) * np.sin(omega_m * x[None, :]) \
        * np.exp(1j * omega_m * T)

    # <psi_m, chi> = i int [conj(psi_m) chi_dot - chi d/dt conj(psi_m)] dx
    wx = w[None, :]
    alpha = 1j * ((psi_bar * wx) @ phidot.T
                  - 1j * omega_m * ((psi_bar * wx) @ phi.T))
    beta_inner = 1j * ((psi_bar * wx) @ np.conjugate(phidot).T
                       - 1j * omega_m * ((psi_bar * wx) @ np.conjugate(phi).T))
    # stored as [n, m]
    mats = BogoliubovMatrices(alpha.T.copy(), np.conjugate(beta_inner).T.copy(),
                              T, z0)
    loss = mats.cutoff_loss()
    if loss > unitarity_tol:
        raise UnitarityLoss(
            f"completeness residual {loss:.3e} > {unitarity_tol:.0e}; "
            f"increase n_max")
    return mats


def photon_number_out(mats: BogoliubovMatrices, m: int) -> float:
    """Vacuum-input photon number in out mode m: N_m = sum_n |beta_nm|^2."""
    if not 1 <= m <= mats.n_max:
        raise ValueError(f"m must lie in [1, {mats.n_max}]")
    return float(np.sum(np.abs(mats.beta[:, m - 1]) ** 2))


def single_mode_dce(epsilon: float, omega0: float,
                    t: float) -> tuple[float, BogoliubovMap]:
    """Resonantly driven single-mode cavity as a squeezer.

    Photon number sinh^2(epsilon omega0 t), together with the equivalent
    degenerate-amplifier map (cosh, sinh) of the same argument.
    """
    if epsilon < 0 or omega0 < 0 or t < 0:
        raise ValueError("epsilon, omega0, t must be >= 0")
    bmap = dpa_evolution(epsilon * omega0 / 2.0, t)
    return math.sinh(epsilon * omega0 * t) ** 2, bmap


def reflected_ray_phase(A: float, kappa: float, u, Omega: float) -> np.ndarray:
    """Phase of a probe ray of frequency Omega reflected off the receding mirror.

    For retarded time u = t - x the reflection time solves
    u = 2 t + A e^{-2 kappa t} - B, closed-form via the Lambert W
    function; the reflected phase is Omega A e^{-2 kappa t(u)} up to a
    constant, i.e. an exponential chirp with asymptotic e-folding rate
    kappa.  Rays with u <= 0 bounced off the still-static mirror and
    stay monochromatic.
    """
    traj = MirrorTrajectory("receding", A=A, kappa=kappa)
    u = np.asarray(u, dtype=float)
    phase = np.empty_like(u)
    early = u <= 0.0
    phase[early] = Omega * (traj.B - u[early])
    ul = u[~early]
    arg = -kappa * A * np.exp(-kappa * (ul + traj.B))
    s = -np.real(lambertw(arg, k=0)) / (kappa * A)
    phase[~early] = Omega * A * s
    return phase


def receding_mirror_grid(kappa: float, span_before: float = 3.0,
                         span_after: float = 20.0,
                         n_samples: int = 2**15) -> np.ndarray:
    """Recommended uniform retarded-time grid for the receding mirror."""
    return np.linspace(-span_before / kappa, span_after / kappa, n_samples,
                       endpoint=False)


def receding_mirror_spectrum(A: float, kappa: float, tau_grid=None,
                             probe_frequency: float | None = None,
                             fit_band: tuple[float, float] | None = None) -> SpectrumSeries:
    """Spectrum of a probe ray reflected off the exponentially receding mirror.

    Builds exp[i Theta(u)] from the exact ray tracing and reuses the
    red-shift spectrum and thermal-fit machinery of the accelerated
    observer (the late-time Theta is C e^{-kappa u}, the same form with
    the e-folding rate kappa).  A probe frequency far above kappa keeps
    the measured band in the asymptotic zone: at the emission point of
    frequency w the chirp rate deviates from kappa by exactly w/Omega.
    The fitted temperature (natural units, stamped on the returned
    series) approaches kappa / (2 pi).
    """
    if tau_grid is None:
        tau_grid = receding_mirror_grid(kappa)
    u = np.asarray(tau_grid, dtype=float)
    if u.size < 16:
        raise ValueError("tau_grid too short")
    du = u[1] - u[0]
    if not np.allclose(np.diff(u), du, rtol=1e-9):
        raise ValueError("tau_grid must be uniform")
    if probe_frequency is None:
        # fast enough that the thermal band sits deep in the asymptotic
        # chirp zone, slow enough for the grid to resolve
        probe_frequency = min(0.35 * math.pi / du, 2000.0 * kappa)
    traj = MirrorTrajectory("receding", A=A, kappa=kappa)
    phase = reflected_ray_phase(A, kappa, u, probe_frequency)
    # asymptotic exponential-tail coefficient of the reflected phase
    tail_coeff = probe_frequency * A * math.exp(-kappa * traj.B)
    # smooth-step subtraction placed after the band has been emitted:
    # the instantaneous frequency kappa Theta(u) falls below kappa/2
    # once Theta = tail_coeff e^{-kappa u} drops under one half
    width = 2.0 / kappa
    u_slow = math.log(max(2.0 * tail_coeff, math.e)) / kappa
    center = u_slow + 2.0 / kappa
    if u[-1] < center + 3.0 * width:
        raise ValueError(
            "tau_grid ends before the chirp settles; extend the grid or "
            "lower probe_frequency")
    span = u[-1] - u[0]
    frac = min((2.0 / kappa) / span, 0.25)
    series = _exponential_chirp_spectrum(
        phase, u, rate=kappa, tail_coeff=tail_coeff,
        step_center=center, step_width=width,
        taper_frac=frac, pad_factor=4, min_span=5.0 / kappa)
    band = fit_band if fit_band is not None else (0.5 * kappa, 3.0 * kappa)
    planck_fit_1d(series, band, consts=NATURAL)
    return series


def dce_threshold(epsilon: float, omega: float, Q: float) -> bool:
    """Above parametric threshold iff epsilon * omega * Q > 1 (strict)."""
    if epsilon < 0 or omega < 0 or Q < 0:
        raise ValueError("all arguments must be >= 0")
    return epsilon * omega * Q > 1.0
