"""An analogue event horizon in a dc-SQUID array.

A transmission line of flux-tunable SQUID inductors carries signals at
c_s = dx / sqrt(L C0).  Push a step-like flux pulse along the bias line
at speed u just under the unbiased c_s: in the frame of the pulse the
line ahead is fast and the line behind is slow, and where c_s(x) = u a
horizon forms.  The speed-of-light gradient there sets a Hawking
temperature within reach of a dilution refrigerator.

Run:  python demos/07_squid_horizon.py [--plot]
"""

import argparse

import numpy as np

from vacamp import squidsim as sq
from vacamp.constants import CODATA2018 as K


def main(plot=False):
    params = sq.reference_array()
    pulse = sq.reference_pulse(params)

    c_s0 = float(sq.speed_of_light_profile(params, sq.FluxPulse("none"), 0.0))
    i_c_min = sq.squid_critical_current(params.junction_critical_current,
                                        pulse.amplitude)
    w_p = sq.plasma_frequency(i_c_min, params.junction_capacitance)
    print(f"unbiased line speed   : {c_s0:.4e} m/s = c/{K.c / c_s0:.1f}")
    print(f"pulse amplitude       : {pulse.amplitude / K.flux_quantum:.2f} Phi_0")
    print(f"pulse velocity        : {pulse.center_velocity:.4e} m/s "
          f"({pulse.center_velocity / c_s0:.2f} c_s)")
    print(f"edge width            : {1 / pulse.steepness * 1e6:.1f} um "
          f"({1 / (pulse.steepness * params.cell_spacing):.0f} cells)")
    print(f"edge frequency scale  : {pulse.center_velocity * pulse.steepness:.3e} "
          f"rad/s (plasma/10 cap: {w_p / 10:.3e})")

    report = sq.find_horizon(params, pulse)
    print(f"\nhorizon at x = {report.position * 1e6:.2f} um (comoving frame)")
    print(f"|dc_s/dx|     = {report.gradient:.4e} 1/s")
    print(f"T_H           = {report.temperature * 1e3:.1f} mK")
    print(f"emitted power = {report.power:.3e} W")

    w_grid = np.geomspace(1e10, 3e12, 5)
    occupancy, flux = sq.analogue_spectrum(report.temperature, w_grid)
    print(f"\n{'omega (rad/s)':>14} {'occupancy':>12} {'flux density':>14}")
    for w, n, f in zip(w_grid, occupancy, flux):
        print(f"{w:14.3e} {n:12.4e} {f:14.4e}")

    if plot:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
        x = np.linspace(-6, 6, 400) / pulse.steepness
        c_s = sq.speed_of_light_profile(params, pulse, x)
        g_tt, _, _ = sq.effective_metric(params, pulse, x)
        fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4))
        ax1.plot(x * 1e6, c_s / c_s0, label="$c_s(x)/c_s(0)$")
        ax1.axhline(pulse.center_velocity / c_s0, ls="--", c="k",
                    label="pulse speed u")
        ax1.axvline(report.position * 1e6, color="r", lw=0.8)
        ax1.set_xlabel("comoving x (um)")
        ax1.legend()
        ax2.plot(x * 1e6, g_tt)
        ax2.axhline(0.0, ls="--", c="k")
        ax2.set_xlabel("comoving x (um)")
        ax2.set_ylabel("$g_{tt}$ (m$^2$/s$^2$)")
        fig.tight_layout()
        fig.savefig("demo07_squid.png", dpi=150)
        print("wrote demo07_squid.png")


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--plot", action="store_true")
    main(parser.parse_args().plot)
