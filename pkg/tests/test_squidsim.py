import dataclasses
import math

import numpy as np
import pytest
from scipy.integrate import quad

from vacamp import squidsim as sq
from vacamp.constants import CODATA2018 as K
from vacamp.errors import NoHorizon, OverCritical, SuppressedJunction
from vacamp.horizon import power_1d

PHI0 = K.flux_quantum


def test_critical_current_zero_flux():
    assert sq.squid_critical_current(2e-6, 0.0) == pytest.approx(4e-6,
                                                                 rel=1e-14)


def test_critical_current_suppressed_at_half_quantum():
    with pytest.raises(SuppressedJunction):
        sq.squid_critical_current(2e-6, 0.5 * PHI0)
    with pytest.raises(SuppressedJunction):
        sq.squid_critical_current(2e-6, 0.7 * PHI0)


def test_critical_current_at_fifth_of_quantum():
    got = sq.squid_critical_current(1e-6, 0.2 * PHI0)
    assert got == pytest.approx(2e-6 * math.cos(0.2 * math.pi), rel=1e-14)
    assert got == pytest.approx(1.618e-6, rel=1e-3)


def test_inductance_zero_current_limit():
    i_c_s = 4e-6
    base = PHI0 / (2 * math.pi * i_c_s)
    assert sq.squid_inductance(0.0, i_c_s) == pytest.approx(base, rel=1e-14)
    assert sq.squid_inductance(1e-12 * i_c_s, i_c_s) == pytest.approx(
        base, rel=1e-12)


def test_inductance_near_critical():
    i_c_s = 4e-6
    base = PHI0 / (2 * math.pi * i_c_s)
    near = sq.squid_inductance(i_c_s * (1 - 1e-12), i_c_s)
    assert near == pytest.approx(math.pi / 2 * base, rel=1e-5)
    with pytest.raises(OverCritical):
        sq.squid_inductance(i_c_s, i_c_s)


def test_inductance_monotone_in_current():
    i_c_s = 4e-6
    currents = np.linspace(0.0, 0.999 * i_c_s, 200)
    values = [sq.squid_inductance(i, i_c_s) for i in currents]
    assert all(b > a for a, b in zip(values, values[1:]))


def test_plasma_frequency_scaling():
    w1 = sq.plasma_frequency(1e-6, 1e-15)
    w4 = sq.plasma_frequency(4e-6, 1e-15)
    assert w4 / w1 == pytest.approx(2.0, rel=1e-14)
    # flux bias at 0.2 Phi0 lowers the plasma frequency by sqrt(cos(0.2 pi))
    i0 = sq.squid_critical_current(1e-6, 0.0)
    ib = sq.squid_critical_current(1e-6, 0.2 * PHI0)
    assert sq.plasma_frequency(ib, 1e-15) / sq.plasma_frequency(i0, 1e-15) \
        == pytest.approx(math.sqrt(math.cos(0.2 * math.pi)), rel=1e-12)


def test_speed_profile_unbiased_constant():
    params = sq.reference_array()
    pulse = sq.FluxPulse("none")
    x = np.linspace(-1.0, 1.0, 11)
    c_s = sq.speed_of_light_profile(params, pulse, x)
    assert np.all(c_s == c_s[0])
    expected = params.cell_spacing / math.sqrt(
        PHI0 / (2 * math.pi * 2 * params.junction_critical_current)
        * params.ground_capacitance)
    assert c_s[0] == pytest.approx(expected, rel=1e-14)


def test_speed_profile_suppression_deep_inside():
    params = sq.reference_array()
    pulse = sq.reference_pulse(params)
    c0 = float(sq.speed_of_light_profile(params, sq.FluxPulse("none"), 0.0))
    deep = float(sq.speed_of_light_profile(params, pulse,
                                           50.0 / pulse.steepness))
    assert deep / c0 == pytest.approx(math.sqrt(math.cos(0.2 * math.pi)),
                                      rel=1e-10)


def test_speed_profile_monotone_on_edge():
    params = sq.reference_array()
    pulse = sq.reference_pulse(params)
    x = np.linspace(-5.0, 5.0, 101) / pulse.steepness
    c_s = sq.speed_of_light_profile(params, pulse, x)
    assert np.all(np.diff(c_s) < 0)


def test_pulse_amplitude_validation():
    with pytest.raises(ValueError):
        sq.FluxPulse("tanh_step", amplitude=0.6 * PHI0, steepness=1.0)
    with pytest.raises(ValueError):
        sq.FluxPulse("weird")


def test_effective_metric_signature_flip():
    params = sq.reference_array()
    pulse = sq.reference_pulse(params)
    x = np.linspace(-10.0, 10.0, 2001) / pulse.steepness
    g_tt, g_tx, g_xx = sq.effective_metric(params, pulse, x)
    assert g_tx == pulse.center_velocity and g_xx == 1.0
    signs = np.sign(g_tt)
    flips = np.count_nonzero(np.diff(signs))
    assert flips == 1
    report = sq.find_horizon(params, pulse)
    g_at_h, _, _ = sq.effective_metric(params, pulse, report.position)
    assert abs(g_at_h) < 1e-8 * pulse.center_velocity**2


def test_find_horizon_root_accuracy():
    params = sq.reference_array()
    pulse = sq.reference_pulse(params)
    report = sq.find_horizon(params, pulse)
    c_at_root = float(sq.speed_of_light_profile(params, pulse,
                                                report.position))
    assert abs(c_at_root - pulse.center_velocity) \
        < 1e-10 * pulse.center_velocity
    assert report.residual < 1e-10


def test_no_horizon_outside_speed_range():
    params = sq.reference_array()
    pulse = sq.reference_pulse(params)
    c0 = float(sq.speed_of_light_profile(params, sq.FluxPulse("none"), 0.0))
    for fraction in (1.01, 0.85):
        fast = dataclasses.replace(pulse, center_velocity=fraction * c0)
        with pytest.raises(NoHorizon):
            sq.find_horizon(params, fast)
    with pytest.raises(NoHorizon):
        sq.find_horizon(params, sq.FluxPulse("none", center_velocity=0.5 * c0))


def test_gradient_analytic_vs_finite_difference():
    params = sq.reference_array()
    pulse = sq.reference_pulse(params)
    report = sq.find_horizon(params, pulse)
    fd = sq.finite_difference_gradient(params, pulse, report.position)
    assert abs(report.gradient / fd - 1.0) < 1e-3


def test_reference_temperature_band():
    params = sq.reference_array()
    pulse = sq.reference_pulse(params)
    report = sq.find_horizon(params, pulse)
    assert 0.080 < report.temperature < 0.160
    assert report.power == pytest.approx(power_1d(report.temperature),
                                         rel=1e-12)
    assert sq.analogue_hawking_temperature(params, pulse) == \
        report.temperature


def test_temperature_linear_in_steepness():
    params = sq.reference_array()
    pulse = sq.reference_pulse(params)
    t1 = sq.find_horizon(params, pulse).temperature
    half = dataclasses.replace(pulse, steepness=0.5 * pulse.steepness)
    t2 = sq.find_horizon(params, half).temperature
    assert t2 / t1 == pytest.approx(0.5, rel=1e-9)


def test_edge_frequency_honors_plasma_cap():
    params = sq.reference_array()
    pulse = sq.reference_pulse(params, frequency_safety=10.0)
    i_c_min = sq.squid_critical_current(params.junction_critical_current,
                                        pulse.amplitude)
    w_p_min = sq.plasma_frequency(i_c_min, params.junction_capacitance)
    assert pulse.center_velocity * pulse.steepness <= w_p_min / 10.0 * (1 + 1e-12)


def test_analogue_spectrum_values():
    t_h = 0.12
    w_star = K.k_B * t_h / K.hbar
    occupancy, flux = sq.analogue_spectrum(t_h, np.array([w_star]))
    assert occupancy[0] == pytest.approx(1.0 / (math.e - 1.0), rel=1e-12)
    assert flux[0] == pytest.approx(K.hbar * w_star * occupancy[0]
                                    / (2 * math.pi), rel=1e-12)


def test_analogue_spectrum_monotone():
    t_h = 0.1
    # keep hbar omega / k_B T below ~40 so the occupancy stays resolvable
    omega = np.geomspace(1e8, 5e11, 200)
    occupancy, _ = sq.analogue_spectrum(t_h, omega)
    assert np.all(np.diff(occupancy) < 0)


def test_analogue_spectrum_integrates_to_power_1d():
    t_h = 0.12
    x_scale = K.k_B * t_h / K.hbar

    def integrand(w):
        return float(sq.analogue_spectrum(t_h, np.array([w]))[1][0])

    total, _ = quad(integrand, 1e-6 * x_scale, 60.0 * x_scale, limit=200)
    assert total == pytest.approx(power_1d(t_h), rel=1e-3)


def test_effective_length_ratios():
    assert sq.squid_effective_length(2e-10, 4e-7) == pytest.approx(5e-4)
    assert sq.squid_effective_length(4e-10, 4e-7) == pytest.approx(1e-3)
    # flux bias at 0.2 Phi0 stretches the effective length by 1/cos(0.2 pi)
    i0 = sq.squid_critical_current(1e-6, 0.0)
    ib = sq.squid_critical_current(1e-6, 0.2 * PHI0)
    l0 = sq.squid_inductance(0.0, i0)
    lb = sq.squid_inductance(0.0, ib)
    ratio = sq.squid_effective_length(lb, 4e-7) \
        / sq.squid_effective_length(l0, 4e-7)
    assert ratio == pytest.approx(1.0 / math.cos(0.2 * math.pi), rel=1e-12)


def test_resonator_effective_length():
    assert sq.resonator_effective_length(5e-3, 1e-10, 4e-10) == \
        pytest.approx(2.5e-3, rel=1e-14)
