"""A mirror racing away at (almost) the speed of light.

The trajectory z(t) = -t - A e^{-2 kappa t} + B produces an effective
horizon: late rays never catch the mirror.  A probe ray that does
reflect comes back exponentially red-shifted with e-folding rate kappa,
so its spectrum carries the same thermal tail as the accelerated
observer's, at T_eff = kappa / 2 pi.  This is the moving-mirror version
of black-hole evaporation.

Run:  python demos/06_receding_mirror.py [--plot]
"""

import argparse
import math

import numpy as np

from vacamp import dce

KAPPA = 1.0
A = 0.5 / KAPPA


def main(plot=False):
    traj = dce.MirrorTrajectory("receding", A=A, kappa=KAPPA)
    print("mirror position z(t):",
          ", ".join(f"z({t:.0f}) = {float(traj.position(t)):.3f}"
                    for t in (0.0, 1.0, 3.0, 10.0)))

    s = dce.receding_mirror_spectrum(A, KAPPA)
    expected = KAPPA / (2 * math.pi)
    print(f"fitted T_eff   = {s.fitted_temperature:.6f} (natural units)")
    print(f"kappa / 2 pi   = {expected:.6f}")
    print(f"relative error = {abs(s.fitted_temperature / expected - 1):.2e}")

    print(f"{'omega/kappa':>12} {'P(-w)/P(+w)':>14} {'e^(-2 pi w/kappa)':>18}")
    for w in (0.5, 1.0, 2.0, 3.0):
        ratio = s.interp_power(-w * KAPPA) / s.interp_power(w * KAPPA)
        print(f"{w:12.1f} {ratio:14.6e} {math.exp(-2 * math.pi * w):18.6e}")

    if plot:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
        u = dce.receding_mirror_grid(KAPPA)
        probe = min(0.35 * math.pi / (u[1] - u[0]), 2000.0 * KAPPA)
        phase = dce.reflected_ray_phase(A, KAPPA, u, probe)
        fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4))
        late = u > 0
        ax1.semilogy(u[late], phase[late], lw=0.8)
        ax1.set_xlabel("retarded time $u \\kappa$")
        ax1.set_ylabel("reflected phase (rad)")
        mask = np.abs(s.frequencies) < 6 * KAPPA
        ax2.semilogy(s.frequencies[mask] / KAPPA, s.power[mask], lw=0.8)
        ax2.set_xlabel("frequency / $\\kappa$")
        ax2.set_ylabel("power spectrum")
        ax2.set_ylim(1e-12, None)
        fig.tight_layout()
        fig.savefig("demo06_receding.png", dpi=150)
        print("wrote demo06_receding.png")


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--plot", action="store_true")
    main(parser.parse_args().plot)
