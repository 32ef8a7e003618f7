"""Black holes as thermodynamic objects.

Surface gravity plays the role of the acceleration parameter: a
Schwarzschild hole of mass M radiates at T_H = hbar c^3/(8 pi G M k_B),
carries entropy proportional to its horizon area, and beams its 1D
near-horizon radiation with the one-dimensional blackbody power.  A
static observer hovering near the horizon measures the blue-shifted
local temperature, which smoothly becomes the acceleration temperature
of the previous demo.

Run:  python demos/04_black_hole_thermodynamics.py [--plot]
"""

import argparse
import math

import numpy as np

from vacamp import horizon as hz
from vacamp.constants import CODATA2018 as K, planck_scales

SOLAR = 1.989e30


def main(plot=False):
    print(f"{'mass':>12} {'r_s':>12} {'T_H (K)':>12} {'S (J/K)':>12} "
          f"{'P_1D (W)':>12}")
    for label, mass in (("asteroid", 1e15), ("moon", 7.3e22),
                        ("earth", 5.97e24), ("sun", SOLAR),
                        ("Sgr A*", 4.3e6 * SOLAR)):
        bh = hz.BlackHole(mass)
        t_h = hz.hawking_temperature(bh)
        print(f"{label:>12} {hz.schwarzschild_radius(bh):12.4e} "
              f"{t_h:12.4e} {hz.bh_entropy(bh):12.4e} "
              f"{hz.power_1d(t_h):12.4e}")

    m_p, e_p = planck_scales()
    print(f"\nsemiclassical treatment holds far above the Planck scales: "
          f"m_P = {m_p:.2e} kg, E_P = {e_p:.2e} GeV")

    bh = hz.BlackHole(SOLAR)
    r_s = hz.schwarzschild_radius(bh)
    t_h = hz.hawking_temperature(bh)
    print(f"\nsolar-mass hole, local temperature seen by a hovering observer:")
    print(f"{'r/r_s - 1':>12} {'T(r)/T_H':>12} {'Unruh form':>12}")
    for delta in (1e-1, 1e-3, 1e-6):
        r = r_s * (1 + delta)
        t_local = hz.local_temperature(bh, r)
        t_acc = K.hbar * hz.static_acceleration(bh, r) / K.c \
            / (2 * math.pi * K.k_B)
        print(f"{delta:12.0e} {t_local / t_h:12.4e} {t_acc / t_h:12.4e}")
    print("near the horizon the two columns agree: Hawking radiation is "
          "the acceleration effect in disguise")

    if plot:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
        ratios = np.geomspace(1.0001, 1e3, 300)
        t_local = [hz.local_temperature(bh, r * r_s) for r in ratios]
        u_ff = [hz.pg_freefall_velocity(bh, r * r_s) / K.c for r in ratios]
        fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4))
        ax1.loglog(ratios - 1, np.array(t_local) / t_h)
        ax1.set_xlabel("$r/r_s - 1$")
        ax1.set_ylabel("$T(r)/T_H$")
        ax2.semilogx(ratios, u_ff)
        ax2.axhline(1.0, ls="--", c="k")
        ax2.set_xlabel("$r/r_s$")
        ax2.set_ylabel("free-fall velocity / c")
        fig.tight_layout()
        fig.savefig("demo04_blackhole.png", dpi=150)
        print("wrote demo04_blackhole.png")


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--plot", action="store_true")
    main(parser.parse_args().plot)
