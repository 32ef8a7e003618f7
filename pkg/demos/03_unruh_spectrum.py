"""The Unruh effect as an exponential Doppler shift.

On the worldline of a uniformly accelerated observer a plane wave turns
into the chirp exp[i (Omega/alpha) e^{-alpha tau}].  Its two-sided power
spectrum does not vanish at negative frequencies: the absorption tail is
exactly Planckian at T = hbar alpha / (2 pi k_B).  Desk-scale numbers
are absurdly cold (4e-20 K at 1 g), which is why nobody has felt it.

Run:  python demos/03_unruh_spectrum.py [--plot]
"""

import argparse

import numpy as np

from vacamp import horizon as hz
from vacamp.constants import CODATA2018 as K


def main(plot=False):
    for accel in (9.8, 1e18):
        p = hz.AccelerationParams(accel)
        print(f"proper acceleration {accel:.3g} m/s^2 -> "
              f"T_U = {hz.unruh_temperature(p):.3e} K")

    # work in units of alpha; the physics is scale invariant
    p = hz.AccelerationParams.from_accel_param(1.0)
    s = hz.unruh_spectrum(None, p)
    t_fit, residual = hz.planck_fit_1d(s, (0.5, 3.0))
    t_exact = hz.unruh_temperature(p)
    print(f"fitted temperature:  {t_fit:.6e} K")
    print(f"exact  temperature:  {t_exact:.6e} K  "
          f"(rel err {abs(t_fit / t_exact - 1):.1e}, log residual {residual:.1e})")

    print(f"{'omega/alpha':>12} {'P(-w)/P(+w)':>14} {'detailed balance':>18}")
    for w in (0.5, 1.0, 2.0, 3.0):
        ratio = s.interp_power(-w) / s.interp_power(w)
        print(f"{w:12.1f} {ratio:14.6e} {np.exp(-2 * np.pi * w):18.6e}")

    if plot:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
        mask = np.abs(s.frequencies) < 6.0
        fig, ax = plt.subplots(figsize=(6, 4))
        ax.semilogy(s.frequencies[mask], s.power[mask], lw=0.8)
        w = np.linspace(0.3, 5.0, 200)
        ax.semilogy(-w, 2 * np.pi / w / np.expm1(2 * np.pi * w), "k--",
                    label="thermal tail")
        ax.set_xlabel("frequency (units of $\\alpha$)")
        ax.set_ylabel("power spectrum")
        ax.set_ylim(1e-12, 1e4)
        ax.legend()
        fig.tight_layout()
        fig.savefig("demo03_unruh.png", dpi=150)
        print("wrote demo03_unruh.png")


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--plot", action="store_true")
    main(parser.parse_args().plot)
