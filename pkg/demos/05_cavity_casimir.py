"""Dynamical Casimir effect in a vibrating cavity.

Shake one mirror of a 1D cavity at twice its fundamental and photon
pairs condense out of the vacuum.  The field follows from a single
increasing function R(u) solving R(t+z(t)) - R(t-z(t)) = 2, marched
along characteristics; projecting the evolved modes back onto the
static basis gives the Bogoliubov matrices and the photon spectrum.
Everything here is in natural units with the cavity length as 1.

Run:  python demos/05_cavity_casimir.py [--plot]
"""

import argparse
import math

import numpy as np

from vacamp import dce

EPS = 0.01
Z0 = 1.0
W1 = math.pi / Z0


def run_drive(t_drive, n_max=64):
    traj = dce.MirrorTrajectory("sinusoidal", z0=Z0, epsilon=EPS,
                                drive_frequency=2 * W1, t_drive=t_drive)
    rfunc = dce.solve_moore(traj, T=traj.t_stop + 2.0, grid_step=Z0 / 2048)
    mats = dce.dce_bogoliubov(rfunc, traj, traj.t_stop + 1.0, n_max=n_max)
    return rfunc, mats


def main(plot=False):
    print(f"drive at 2 w_1, relative amplitude {EPS}")
    print(f"{'T (crossings)':>14} {'N_1':>12} {'(eps w1 T/2)^2':>15}")
    drives = [4.0, 6.0, 8.0]
    spectra = {}
    for t_drive in drives:
        _, mats = run_drive(t_drive)
        n_1 = dce.photon_number_out(mats, 1)
        spectra[t_drive] = [dce.photon_number_out(mats, m)
                            for m in range(1, 17)]
        print(f"{t_drive:14.1f} {n_1:12.4e} "
              f"{(EPS * W1 * t_drive / 2) ** 2:15.4e}")
    print("quadratic growth at the squeeze rate eps w1 / 2; photons sit "
          "almost entirely in the driven mode, with a weak odd-harmonic tail")

    n_total, bmap = dce.single_mode_dce(EPS, W1, drives[-1])
    print(f"\nsingle-mode counterpart: N = {n_total:.4e}, "
          f"alpha = {bmap.alpha.real:.6f} (a plain squeezing transformation)")
    print(f"lossy-cavity threshold eps w Q > 1: Q = 1e4 -> "
          f"{dce.dce_threshold(EPS, W1, 1e4)}, Q = 10 -> "
          f"{dce.dce_threshold(EPS, W1, 10.0)}")

    if plot:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
        fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4))
        rfunc, _ = run_drive(8.0)
        u = np.linspace(rfunc.u_min + 0.01, rfunc.u_max - 0.01, 2000)
        ax1.plot(u, rfunc(u) - u / Z0, lw=0.8)
        ax1.set_xlabel("null coordinate u")
        ax1.set_ylabel("R(u) - u/z0")
        modes = np.arange(1, 17)
        for t_drive in drives:
            ax2.semilogy(modes, spectra[t_drive], "o-", ms=3,
                         label=f"T = {t_drive:.0f}")
        ax2.set_xlabel("mode number")
        ax2.set_ylabel("photon number")
        ax2.legend()
        fig.tight_layout()
        fig.savefig("demo05_cavity.png", dpi=150)
        print("wrote demo05_cavity.png")


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--plot", action="store_true")
    main(parser.parse_args().plot)
