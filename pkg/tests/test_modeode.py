import math

import numpy as np
import pytest

from vacamp import modeode as mo
from vacamp.symplectic import mean_photon_number


def sudden_step_map(w_in, w_out):
    """Oracle: match f and f' across an instantaneous frequency jump."""
    alpha = (w_out + w_in) / (2.0 * math.sqrt(w_in * w_out))
    beta = (w_out - w_in) / (2.0 * math.sqrt(w_in * w_out))
    return alpha, beta


def tanh_ramp_beta_sq(w_in, w_out, tau):
    """Oracle: closed-form |beta|^2 for omega^2 interpolating by tanh(t/tau)."""
    w_minus = 0.5 * (w_out - w_in)
    return (math.sinh(math.pi * w_minus * tau) ** 2
            / (math.sinh(math.pi * w_in * tau) * math.sinh(math.pi * w_out * tau)))


def test_positive_frequency_ic_values():
    f0, fdot0 = mo.positive_frequency_ic(2.0, 1.0, hbar=1.0)
    assert f0 == pytest.approx(0.5)
    assert fdot0 == pytest.approx(-1.0j)


def test_positive_frequency_norms():
    f0, fdot0 = mo.positive_frequency_ic(3.7, 0.4, hbar=1.0)
    norm = mo.kg_inner(f0, fdot0, f0, fdot0, 0.4, hbar=1.0)
    assert norm.real == pytest.approx(1.0, rel=1e-14)
    conj_norm = mo.kg_inner(np.conjugate(f0), np.conjugate(fdot0),
                            np.conjugate(f0), np.conjugate(fdot0), 0.4,
                            hbar=1.0)
    assert conj_norm.real == pytest.approx(-1.0, rel=1e-14)
    cross = mo.kg_inner(f0, fdot0, np.conjugate(f0), np.conjugate(fdot0), 0.4,
                        hbar=1.0)
    assert abs(cross) < 1e-15


def test_kg_inner_linearity():
    f0, fdot0 = mo.positive_frequency_ic(1.3, 1.0, hbar=1.0)
    a = 0.7 - 0.3j
    lhs = mo.kg_inner(f0, fdot0, a * f0, a * fdot0, 1.0, hbar=1.0)
    rhs = a * mo.kg_inner(f0, fdot0, f0, fdot0, 1.0, hbar=1.0)
    assert lhs == pytest.approx(rhs, rel=1e-14)


def test_constant_profile_phase_evolution():
    w = 2.0
    prof = mo.FrequencyProfile("constant", omega_in=w)
    traj = mo.evolve_mode(prof, 0.0, 3.0, m=1.0, tol=1e-11, hbar=1.0)
    x_zp = math.sqrt(1.0 / (2.0 * w))
    expected = x_zp * np.exp(-1j * w * traj.times[-1])
    assert abs(traj.f[-1] - expected) < 1e-9 * x_zp
    bmap = mo.extract_bogoliubov(traj, w)
    assert abs(abs(bmap.alpha) - 1.0) < 1e-9
    assert abs(bmap.beta) < 1e-9


def test_norm_history_conserved():
    prof = mo.FrequencyProfile("tanh_ramp", omega_in=1.0, omega_out=4.0,
                               ramp_time=0.5)
    traj = mo.evolve_mode(prof, -10.0, 10.0, m=1.0, hbar=1.0)
    budget = 10.0 * traj.tol * len(traj.times)
    assert np.max(np.abs(traj.kg_norm_history - 1.0)) < budget


def test_tanh_ramp_matches_closed_form():
    w_in, w_out, tau = 1.0, 3.0, 0.4
    prof = mo.FrequencyProfile("tanh_ramp", omega_in=w_in, omega_out=w_out,
                               ramp_time=tau)
    traj = mo.evolve_mode(prof, -20 * tau, 20 * tau, m=1.0, hbar=1.0)
    beta_sq = mean_photon_number(mo.extract_bogoliubov(traj, w_out))
    assert beta_sq == pytest.approx(tanh_ramp_beta_sq(w_in, w_out, tau),
                                    rel=1e-8)


def test_sudden_step_converges_to_matching_oracle():
    w_in, w_out = 1.0, 4.0
    _, beta = sudden_step_map(w_in, w_out)
    values = []
    for width in (4e-4, 2e-4):
        prof = mo.FrequencyProfile("sudden_step", omega_in=w_in,
                                   omega_out=w_out, step_width=width)
        traj = mo.evolve_mode(prof, -20 * width - 2.0, 20 * width + 2.0,
                              m=1.0, hbar=1.0)
        values.append(mean_photon_number(mo.extract_bogoliubov(traj, w_out)))
    extrapolated = values[1] + (values[1] - values[0]) / 3.0
    assert abs(extrapolated / beta**2 - 1.0) < 1e-6


def test_sudden_step_continuity():
    prof = mo.FrequencyProfile("sudden_step", omega_in=1.0, omega_out=2.0)
    traj = mo.evolve_mode(prof, -1.0, 1.0, m=1.0, hbar=1.0)
    # trajectory and derivative stay finite and continuous through the jump
    assert np.all(np.isfinite(traj.f)) and np.all(np.isfinite(traj.fdot))
    steps = np.abs(np.diff(traj.f))
    assert np.max(steps) < 0.5 * np.max(np.abs(traj.f))


def test_adiabatic_limit_suppresses_beta():
    w_in, w_out = 1.0, 2.0
    prof = mo.FrequencyProfile("tanh_ramp", omega_in=w_in, omega_out=w_out,
                               ramp_time=100.0 / w_in)
    traj = mo.evolve_mode(prof, -2000.0, 2000.0, m=1.0, hbar=1.0)
    assert mean_photon_number(mo.extract_bogoliubov(traj, w_out)) < 1e-6


def test_adiabatic_monotone_in_ramp_time():
    w_in, w_out = 1.0, 2.5
    values = []
    for tau in [0.2, 0.4, 0.8, 1.6, 3.2]:
        prof = mo.FrequencyProfile("tanh_ramp", omega_in=w_in,
                                   omega_out=w_out, ramp_time=tau)
        traj = mo.evolve_mode(prof, -20 * tau, 20 * tau, m=1.0, hbar=1.0)
        values.append(mean_photon_number(mo.extract_bogoliubov(traj, w_out)))
    assert all(b < a for a, b in zip(values, values[1:]))


def test_pumped_profile_grows_exponentially():
    w0, eps = 1.0, 0.05
    prof = mo.FrequencyProfile("sinusoidal_pump", omega_in=w0,
                               pump_depth=eps, pump_frequency=2.0 * w0)
    betas, times = [], np.linspace(40.0, 120.0, 9)
    for t1 in times:
        traj = mo.evolve_mode(prof, 0.0, t1, m=1.0, hbar=1.0)
        bmap = mo.extract_bogoliubov(traj, float(prof.omega(t1)))
        betas.append(abs(bmap.beta))
    betas = np.array(betas)
    slope, intercept = np.polyfit(times, np.log(betas), 1)
    assert slope > 0
    # residuals of the log-linear fit stay small: clean exponential growth
    fit = slope * times + intercept
    assert np.max(np.abs(np.log(betas) - fit)) < 0.05
    # consistent with a squeezing transformation of rate eta = slope / 2
    eta = slope / 2.0
    model = np.sinh(2.0 * eta * times)
    ratio = betas / model
    assert np.max(ratio) / np.min(ratio) < 1.2


def test_time_reversal_returns_initial_conditions():
    prof = mo.FrequencyProfile("tanh_ramp", omega_in=1.0, omega_out=3.0,
                               ramp_time=0.3)
    f0, fdot0 = mo.positive_frequency_ic(1.0, 1.0, hbar=1.0)
    fwd = mo.evolve_mode(prof, -6.0, 6.0, m=1.0, hbar=1.0)

    from scipy.integrate import solve_ivp
    sol = solve_ivp(lambda t, y: np.array([y[1], -prof.omega_sq(t) * y[0]],
                                          dtype=complex),
                    (6.0, -6.0), np.array([fwd.f[-1], fwd.fdot[-1]]),
                    method="DOP853", rtol=1e-10, atol=1e-12)
    assert abs(sol.y[0][-1] - f0) < 1e-8 * abs(f0)
    assert abs(sol.y[1][-1] - fdot0) < 1e-8 * abs(fdot0)


def test_extract_requires_settled_profile():
    prof = mo.FrequencyProfile("tanh_ramp", omega_in=1.0, omega_out=2.0,
                               ramp_time=1.0)
    traj = mo.evolve_mode(prof, -10.0, 0.0, m=1.0, hbar=1.0)  # mid-ramp
    with pytest.raises(ValueError):
        mo.extract_bogoliubov(traj, 2.0)


def test_profile_validation():
    with pytest.raises(ValueError):
        mo.FrequencyProfile("constant", omega_in=-1.0)
    with pytest.raises(ValueError):
        mo.FrequencyProfile("sinusoidal_pump", omega_in=1.0, pump_depth=1.2,
                            pump_frequency=2.0)
    with pytest.raises(ValueError):
        mo.FrequencyProfile("whatever", omega_in=1.0)


def test_parametric_swing_reduces_to_plain_pendulum():
    t = np.linspace(0.0, 10.0, 200)
    theta0, l0, m, length = 0.1, 0.02, 0.5, 2.0
    w_s = math.sqrt(mo.STANDARD_GRAVITY / length)
    expected = (theta0 * np.cos(w_s * t)
                + l0 / (m * w_s * length) * np.sin(w_s * t))
    assert np.allclose(mo.parametric_swing(theta0, l0, m, length, 0.0, t),
                       expected, rtol=1e-14, atol=0.0)


def test_parametric_swing_needs_initial_displacement():
    t = np.linspace(0.0, 20.0, 50)
    assert np.all(mo.parametric_swing(0.0, 0.0, 1.0, 1.0, 0.3, t) == 0.0)


def test_parametric_swing_envelope():
    eps, length = 0.4, 1.0
    w_s = math.sqrt(mo.STANDARD_GRAVITY / length)
    # sample the cosine peaks, where the envelope is exact
    n_peaks = np.arange(1, int(4.0 / eps * w_s / (2 * math.pi)))
    t = 2 * math.pi * n_peaks / w_s
    theta = mo.parametric_swing(0.1, 0.0, 1.0, length, eps, t)
    envelope = 0.1 * np.exp(eps * t / 2.0)
    assert np.max(np.abs(theta / envelope - 1.0)) < 0.01
