"""Bogoliubov-transformation algebra and squeezed-state statistics.

Any linear amplifier acting on a single bosonic mode is described by a
pair of complex coefficients (alpha, beta) mixing the annihilation and
creation operators,

    a_out = alpha a_in - conj(beta) a_in^dagger,

constrained by |alpha|^2 - |beta|^2 = 1.  Starting from vacuum, the mean
output occupation is |beta|^2: nonzero beta means particles out of
nothing.  This module provides the validated coefficient pair, its
composition algebra, and the derived quantum statistics (Fock
amplitudes, entanglement entropy, effective temperature, quadrature
variances) for the one- and two-mode squeezed states produced by
parametric amplifiers and by uniformly accelerated observers.

Phase convention: canonical squeeze constructors keep alpha real and
positive; beta carries the squeezing phase.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .constants import CODATA2018, PhysicalConstants
from .errors import SymplecticViolation, ZeroSqueezing

__all__ = [
    "BogoliubovMap",
    "SqueezeSpec",
    "TwoModeState",
    "make_bogoliubov",
    "squeeze_map",
    "identity_map",
    "compose",
    "inverse",
    "mean_photon_number",
    "dpa_evolution",
    "ndpa_evolution",
    "quadrature_variances",
    "two_mode_amplitudes",
    "entanglement_entropy",
    "invert_effective_temperature",
    "unruh_squeezing",
]

DEFAULT_SYMPLECTIC_TOL = 1e-9


def symplectic_residual(alpha: complex, beta: complex) -> float:
    """Relative deviation of |alpha|^2 - |beta|^2 from 1.

    Normalized by max(1, |alpha|^2 + |beta|^2): for strongly amplified
    maps the two squared moduli are huge and nearly equal, and float64
    cannot represent their unit difference to better than one ulp of the
    large terms.  The relative form is the sharpest check the stored
    representation supports.
    """
    a2 = abs(alpha) ** 2
    b2 = abs(beta) ** 2
    return abs(a2 - b2 - 1.0) / max(1.0, a2 + b2)


@dataclass(frozen=True)
class BogoliubovMap:
    """Validated (alpha, beta) pair of a single-mode Bogoliubov transformation."""

    alpha: complex
    beta: complex
    tol: float = DEFAULT_SYMPLECTIC_TOL

    def __post_init__(self):
        if self.tol <= 0:
            raise ValueError("tolerance must be positive")
        res = symplectic_residual(self.alpha, self.beta)
        if res > self.tol:
            raise SymplecticViolation(
                f"|alpha|^2 - |beta|^2 = 1 violated: relative residual "
                f"{res:.3e} > tol {self.tol:.3e}"
            )

    @property
    def residual(self) -> float:
        return symplectic_residual(self.alpha, self.beta)


@dataclass(frozen=True)
class SqueezeSpec:
    """Squeezing parameter r >= 0 and phase folded into [0, 2 pi)."""

    r: float
    phase: float = 0.0

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("squeezing parameter r must be >= 0")
        object.__setattr__(self, "phase", self.phase % (2.0 * math.pi))


@dataclass(frozen=True)
class TwoModeState:
    """Schmidt decomposition of a two-mode squeezed vacuum.

    fock_amplitudes[n] = tanh(r)^n / cosh(r) is the amplitude of the
    |n, n> component; the stored truncation_error is the exact discarded
    tail probability of the geometric distribution |c_n|^2.
    """

    r: float
    mode_frequency: float
    fock_amplitudes: np.ndarray
    truncation_error: float

    def probabilities(self) -> np.ndarray:
        return np.asarray(self.fock_amplitudes) ** 2


def make_bogoliubov(alpha: complex, beta: complex,
                    tol: float = DEFAULT_SYMPLECTIC_TOL) -> BogoliubovMap:
    """Validate and wrap a coefficient pair; inputs stored unchanged."""
    return BogoliubovMap(complex(alpha), complex(beta), tol)


def identity_map() -> BogoliubovMap:
    return BogoliubovMap(1.0 + 0.0j, 0.0j)


def squeeze_map(r: float, phase: float = 0.0,
                tol: float = DEFAULT_SYMPLECTIC_TOL) -> BogoliubovMap:
    """Canonical squeeze: alpha = cosh r, beta = e^{i phase} sinh r."""
    spec = SqueezeSpec(r, phase)
    return BogoliubovMap(complex(math.cosh(spec.r)),
                         cmath.exp(1j * spec.phase) * math.sinh(spec.r), tol)


def compose(first: BogoliubovMap, second: BogoliubovMap) -> BogoliubovMap:
    """Map of applying `first` then `second`.

    Matrix product of the 2x2 blocks (alpha, beta; conj beta, conj alpha)
    acting on the mode-function pair (f, conj f).
    """
    a1, b1 = first.alpha, first.beta
    a2, b2 = second.alpha, second.beta
    alpha = a2 * a1 + b2 * b1.conjugate()
    beta = a2 * b1 + b2 * a1.conjugate()
    tol = 10.0 * max(first.tol, second.tol)
    return BogoliubovMap(alpha, beta, tol)


def inverse(m: BogoliubovMap) -> BogoliubovMap:
    """Inverse transformation: (conj alpha, -beta)."""
    return BogoliubovMap(m.alpha.conjugate(), -m.beta, m.tol)


def mean_photon_number(m: BogoliubovMap) -> float:
    """Vacuum-input mean occupation N = |beta|^2."""
    return abs(m.beta) ** 2


def dpa_evolution(eta: float, t: float,
                  tol: float = DEFAULT_SYMPLECTIC_TOL) -> BogoliubovMap:
    """Degenerate parametric amplifier after time t.

    alpha = cosh(2 eta t), beta = sinh(2 eta t): single-mode squeezing
    with N(t) = sinh^2(2 eta t) photons from vacuum.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    x = 2.0 * eta * t
    return BogoliubovMap(complex(math.cosh(x)), complex(math.sinh(x)), tol)


def ndpa_evolution(eta: float, t: float,
                   tol: float = DEFAULT_SYMPLECTIC_TOL) -> BogoliubovMap:
    """Non-degenerate amplifier: signal-idler pair map.

    alpha = cosh(eta t), beta = sinh(eta t); each mode separately holds
    N_s = N_i = sinh^2(eta t) photons, correlated as a two-mode squeezed
    state with squeezing parameter eta t.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    x = eta * t
    return BogoliubovMap(complex(math.cosh(x)), complex(math.sinh(x)), tol)


def quadrature_variances(eta: float, t: float) -> tuple[float, float]:
    """DPA quadrature variances (e^{4 eta t}, e^{-4 eta t}).

    Vacuum input with the <X^2> = 1 convention; the amplified and
    squeezed quadratures keep unit uncertainty product.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    return math.exp(4.0 * eta * t), math.exp(-4.0 * eta * t)


def two_mode_amplitudes(r: float, tail_tol: float = 1e-12,
                        mode_frequency: float = 1.0) -> TwoModeState:
    """Fock amplitudes c_n = tanh^n(r)/cosh(r) of the two-mode squeezed vacuum.

    Truncated at the smallest n_max whose remaining tail probability
    (exactly tanh^{2(n_max+1)} r) is below tail_tol.
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    if not 0.0 < tail_tol < 1.0:
        raise ValueError("tail_tol must lie in (0, 1)")
    if r == 0.0:
        return TwoModeState(0.0, mode_frequency, np.array([1.0]), 0.0)
    lam = math.tanh(r) ** 2
    # tail after keeping n = 0..n_max is lam^{n_max + 1}
    n_max = max(0, math.ceil(math.log(tail_tol) / math.log(lam)) - 1)
    while lam ** (n_max + 1) >= tail_tol:
        n_max += 1
    n = np.arange(n_max + 1)
    amps = np.tanh(r) ** n / math.cosh(r)
    return TwoModeState(r, mode_frequency, amps, lam ** (n_max + 1))


def invert_effective_temperature(r: float, omega_s: float,
                                 consts: PhysicalConstants = CODATA2018) -> float:
    """Temperature of the reduced single-mode thermal state.

    Unique solution of tanh^2 r = exp(-hbar omega_s / k_B T):
    T = hbar omega_s / (k_B ln(1/tanh^2 r)).
    """
    if omega_s <= 0:
        raise ValueError("omega_s must be positive")
    if r <= 0:
        raise ZeroSqueezing("r = 0 corresponds to the T = 0 limit")
    log_inv = -2.0 * math.log(math.tanh(r))
    return consts.hbar * omega_s / (consts.k_B * log_inv)


def entanglement_entropy(r: float, omega_s: float,
                         consts: PhysicalConstants = CODATA2018) -> float:
    """Von Neumann entropy (nats) of one half of a two-mode squeezed state.

    Tracing out the partner mode leaves a thermal oscillator state, so
    the entropy is the oscillator thermal entropy evaluated at the
    effective temperature from :func:`invert_effective_temperature`:

        S = -ln(1 - e^{-x}) - x / (1 - e^{x}),   x = hbar omega_s / (k_B T).

    Returns 0 at r = 0 (pure vacuum).
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    if r == 0.0:
        return 0.0
    temperature = invert_effective_temperature(r, omega_s, consts)
    x = consts.hbar * omega_s / (consts.k_B * temperature)
    return -math.log1p(-math.exp(-x)) - x / (1.0 - math.exp(x))


def unruh_squeezing(omega: float, accel_param: float) -> float:
    """Squeezing parameter seen by a uniformly accelerated observer.

    r = artanh(exp(-pi omega / accel_param)) with accel_param = a/c, so
    that sinh^2 r = 1/(e^{2 pi omega/accel_param} - 1): a Planck
    occupation at temperature hbar accel_param / (2 pi k_B).
    """
    if omega <= 0:
        raise ValueError("omega must be positive")
    if accel_param < 0:
        raise ValueError("accel_param must be >= 0")
    if accel_param == 0.0:
        return 0.0
    return math.atanh(math.exp(-math.pi * omega / accel_param))
