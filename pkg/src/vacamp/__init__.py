"""vacamp: quantum vacuum amplification toolkit.

Unified numerical treatment of parametric amplification, the Unruh
effect, black-hole (Hawking) thermodynamics, the dynamical Casimir
effect, and the dc-SQUID-array analogue horizon, all expressed through
Bogoliubov transformations.
"""

__version__ = "0.1.0"

from . import constants, dce, horizon, modeode, squidsim, symplectic  # noqa: F401
