import cmath
import math

import numpy as np
import pytest

from vacamp import symplectic as sp
from vacamp.constants import CODATA2018
from vacamp.errors import SymplecticViolation, ZeroSqueezing


def test_identity_map():
    m = sp.make_bogoliubov(1.0, 0.0)
    assert m.alpha == 1.0 and m.beta == 0.0
    assert sp.mean_photon_number(m) == 0.0


def test_squeeze_pair_is_valid():
    m = sp.make_bogoliubov(math.cosh(1.0), math.sinh(1.0))
    assert m.residual < 1e-15


def test_constraint_violation_raises():
    with pytest.raises(SymplecticViolation):
        sp.make_bogoliubov(1.0, 1.0)


def test_inputs_stored_unchanged():
    a, b = cmath.exp(0.3j) * math.cosh(0.7), cmath.exp(-1.1j) * math.sinh(0.7)
    m = sp.make_bogoliubov(a, b)
    assert m.alpha == a and m.beta == b


def test_compose_identity():
    m = sp.squeeze_map(0.8, 0.4)
    composed = sp.compose(sp.identity_map(), m)
    assert composed.alpha == pytest.approx(m.alpha)
    assert composed.beta == pytest.approx(m.beta)


def test_compose_squeeze_addition():
    # oracle: explicit 2x2 product of (alpha, beta; conj beta, conj alpha)
    r1, r2 = 0.6, 1.1
    m = sp.compose(sp.squeeze_map(r1), sp.squeeze_map(r2))
    block1 = np.array([[math.cosh(r1), math.sinh(r1)],
                       [math.sinh(r1), math.cosh(r1)]])
    block2 = np.array([[math.cosh(r2), math.sinh(r2)],
                       [math.sinh(r2), math.cosh(r2)]])
    product = block2 @ block1
    assert m.alpha == pytest.approx(product[0, 0], rel=1e-14)
    assert m.beta == pytest.approx(product[0, 1], rel=1e-14)
    assert m.alpha == pytest.approx(math.cosh(r1 + r2), rel=1e-14)


def test_compose_inverse_pair():
    m = sp.compose(sp.squeeze_map(0.9), sp.squeeze_map(0.9, math.pi))
    assert abs(m.alpha - 1.0) < 1e-14
    assert abs(m.beta) < 1e-14


def test_mean_photon_of_inverse_composition():
    m = sp.make_bogoliubov(cmath.exp(0.2j) * math.cosh(1.3),
                           cmath.exp(0.9j) * math.sinh(1.3))
    assert sp.mean_photon_number(sp.compose(m, sp.inverse(m))) < 1e-10


def test_mean_photon_number_values():
    assert sp.mean_photon_number(sp.make_bogoliubov(math.cosh(1), math.sinh(1))) \
        == pytest.approx(math.sinh(1.0) ** 2, rel=1e-12)


@pytest.mark.parametrize("x", [0.0, 0.5, 1.0, 2.0])
def test_dpa_evolution(x):
    eta = 0.25
    m = sp.dpa_evolution(eta, x / (2 * eta))
    assert m.alpha.real == pytest.approx(math.cosh(x), rel=1e-14)
    assert m.beta.real == pytest.approx(math.sinh(x), rel=1e-14)
    assert sp.mean_photon_number(m) == pytest.approx(math.sinh(x) ** 2,
                                                     rel=1e-12)


def test_dpa_residual_stays_small_at_strong_gain():
    for x in np.linspace(0.0, 20.0, 21):
        m = sp.dpa_evolution(0.5, x)
        assert m.residual < 1e-12


def test_ndpa_signal_idler_balance():
    eta, t = 0.7, 1.43
    m = sp.ndpa_evolution(eta, t)
    n_signal = sp.mean_photon_number(m)
    n_idler = sp.mean_photon_number(m)
    assert n_signal == n_idler == pytest.approx(math.sinh(eta * t) ** 2,
                                                rel=1e-12)
    assert sp.mean_photon_number(sp.ndpa_evolution(eta, 0.0)) == 0.0


def test_quadrature_variances():
    assert sp.quadrature_variances(0.3, 0.0) == (1.0, 1.0)
    v1, v2 = sp.quadrature_variances(0.11, 3.7)
    assert v1 * v2 == pytest.approx(1.0, rel=1e-12)
    # 10 dB of squeezing: var_X2 = 0.1 at 4 eta t = ln 10
    eta = 1.0
    t = math.log(10.0) / 4.0
    assert sp.quadrature_variances(eta, t)[1] == pytest.approx(0.1, rel=1e-12)


def test_two_mode_amplitudes_vacuum():
    state = sp.two_mode_amplitudes(0.0)
    assert list(state.fock_amplitudes) == [1.0]
    assert state.truncation_error == 0.0


def test_two_mode_amplitudes_geometric():
    state = sp.two_mode_amplitudes(1.0, tail_tol=1e-12)
    probs = state.probabilities()
    assert probs.sum() + state.truncation_error == pytest.approx(1.0,
                                                                 abs=1e-14)
    assert state.truncation_error < 1e-12
    ratio = state.fock_amplitudes[1] / state.fock_amplitudes[0]
    assert ratio == pytest.approx(math.tanh(1.0), rel=1e-14)


def _entropy_fock_oracle(r, tail=1e-14):
    # direct sum -sum p_n ln p_n over the reduced thermal state
    lam = math.tanh(r) ** 2
    n_max = int(math.ceil(math.log(tail) / math.log(lam)))
    n = np.arange(n_max + 1)
    p = (1.0 - lam) * lam**n
    return float(-np.sum(p * np.log(p)))


@pytest.mark.parametrize("r", [0.1, 0.5, 1.0, 2.0, 3.0])
def test_entropy_matches_fock_sum(r):
    s = sp.entanglement_entropy(r, omega_s=2 * math.pi * 5e9)
    assert abs(s - _entropy_fock_oracle(r)) < 1e-10


def test_entropy_zero_at_no_squeezing():
    assert sp.entanglement_entropy(0.0, 1.0) == 0.0


def test_entropy_strictly_increasing():
    rs = np.linspace(0.05, 3.0, 40)
    values = [sp.entanglement_entropy(r, 1e10) for r in rs]
    assert all(b > a for a, b in zip(values, values[1:]))


def test_entropy_independent_of_frequency():
    assert sp.entanglement_entropy(1.2, 1e6) == pytest.approx(
        sp.entanglement_entropy(1.2, 1e12), rel=1e-12)


def test_invert_effective_temperature():
    k = CODATA2018
    omega = 2 * math.pi * 7e9
    # tanh^2 r = 1/e  <->  T = hbar omega / k_B
    r = math.atanh(math.exp(-0.5))
    t = sp.invert_effective_temperature(r, omega)
    assert t == pytest.approx(k.hbar * omega / k.k_B, rel=1e-12)


def test_invert_round_trip():
    k = CODATA2018
    omega, temperature = 2 * math.pi * 4e9, 0.035
    r = math.atanh(math.exp(-0.5 * k.hbar * omega / (k.k_B * temperature)))
    assert sp.invert_effective_temperature(r, omega) == pytest.approx(
        temperature, rel=1e-12)


def test_invert_rejects_zero_squeezing():
    with pytest.raises(ZeroSqueezing):
        sp.invert_effective_temperature(0.0, 1e9)


def test_unruh_squeezing_values():
    assert sp.unruh_squeezing(1.0, 0.0) == 0.0
    assert sp.unruh_squeezing(1.0, 1.0) == pytest.approx(
        math.atanh(math.exp(-math.pi)), rel=1e-12)


def test_unruh_squeezing_occupancy_identity():
    # sinh^2 r = Planck occupation at T_U, on a log grid of omega/alpha
    for x in np.geomspace(0.1, 10.0, 25):
        r = sp.unruh_squeezing(x, 1.0)
        occupancy = 1.0 / math.expm1(2 * math.pi * x)
        assert abs(math.sinh(r) ** 2 - occupancy) <= 1e-12 * occupancy


def test_unruh_temperature_independent_of_mode():
    k = CODATA2018
    alpha = 2.0e3
    t_expected = k.hbar * alpha / (2 * math.pi * k.k_B)
    for omega in [0.3 * alpha, alpha, 4.0 * alpha]:
        r = sp.unruh_squeezing(omega, alpha)
        assert sp.invert_effective_temperature(r, omega) == pytest.approx(
            t_expected, rel=1e-10)
