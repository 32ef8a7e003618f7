"""Physical constants and unit conventions shared by all modules.

Values are CODATA 2018, compiled in for reproducibility:

    ==========  =======================  ==============
    symbol      value                    unit
    ==========  =======================  ==============
    h           6.62607015e-34 (exact)   J s
    hbar        h / (2 pi)               J s
    k_B         1.380649e-23 (exact)     J / K
    c           299792458 (exact)        m / s
    e           1.602176634e-19 (exact)  C
    G           6.67430e-11              m^3 / (kg s^2)
    Phi_0       h / (2 e)                Wb
    ==========  =======================  ==============

All public APIs take SI quantities.  The natural-unit system
(hbar = c = k_B = 1) is used internally by the moving-mirror cavity
solver; conversions happen at the boundary through :class:`UnitSystem`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

__all__ = [
    "PhysicalConstants",
    "CODATA2018",
    "NATURAL",
    "UnitSystem",
    "planck_scales",
    "JOULE_PER_GEV",
]

JOULE_PER_GEV = 1.602176634e-10


@dataclass(frozen=True)
class PhysicalConstants:
    """Fundamental constants in SI units (immutable, thread-safe)."""

    hbar: float
    k_B: float
    G: float
    c: float
    e_charge: float
    h: float
    flux_quantum: float = field(init=False)

    def __post_init__(self):
        for name in ("hbar", "k_B", "G", "c", "e_charge", "h"):
            if getattr(self, name) <= 0:
                raise ValueError(f"constant {name!r} must be strictly positive")
        object.__setattr__(self, "flux_quantum", self.h / (2.0 * self.e_charge))


_H = 6.62607015e-34

CODATA2018 = PhysicalConstants(
    hbar=_H / (2.0 * math.pi),
    k_B=1.380649e-23,
    G=6.67430e-11,
    c=299792458.0,
    e_charge=1.602176634e-19,
    h=_H,
)

# hbar = c = k_B = 1; G and e keep their SI values (unused in natural mode).
NATURAL = PhysicalConstants(
    hbar=1.0,
    k_B=1.0,
    G=CODATA2018.G,
    c=1.0,
    e_charge=CODATA2018.e_charge,
    h=2.0 * math.pi,
)


def planck_scales(consts: PhysicalConstants = CODATA2018) -> tuple[float, float]:
    """Planck mass and Planck energy.

    Returns ``(m_P, E_P)`` with the mass in kg and the energy in GeV:
    m_P = sqrt(hbar c / G), E_P = sqrt(hbar c^5 / G).
    """
    m_p = math.sqrt(consts.hbar * consts.c / consts.G)
    e_p_joule = math.sqrt(consts.hbar * consts.c**5 / consts.G)
    return m_p, e_p_joule / JOULE_PER_GEV


class UnitSystem:
    """Convert between SI and natural (hbar = c = k_B = 1) units.

    The natural system is anchored to a reference length ``scale`` in
    meters (one natural time/length unit equals ``scale`` meters, i.e.
    ``scale / c`` seconds).  Conversions are plain multiplications, so
    SI -> natural -> SI round-trips are exact inverses up to floating
    point rounding.
    """

    DIMENSIONS = ("length", "time", "frequency", "energy", "temperature")

    def __init__(self, mode: str = "SI", scale: float = 1.0,
                 consts: PhysicalConstants = CODATA2018):
        if mode not in ("SI", "natural"):
            raise ValueError(f"unknown unit mode {mode!r}")
        if scale <= 0:
            raise ValueError("scale must be positive")
        self.mode = mode
        self.scale = scale
        self.consts = consts

    def _factor(self, dimension: str) -> float:
        """SI units per one natural unit of the given dimension."""
        k = self.consts
        if dimension == "length":
            return self.scale
        if dimension == "time":
            return self.scale / k.c
        if dimension == "frequency":
            return k.c / self.scale
        if dimension == "energy":
            return k.hbar * k.c / self.scale
        if dimension == "temperature":
            return k.hbar * k.c / (self.scale * k.k_B)
        raise ValueError(f"unknown dimension {dimension!r}")

    def to_natural(self, value: float, dimension: str) -> float:
        return value / self._factor(dimension)

    def to_si(self, value: float, dimension: str) -> float:
        return value * self._factor(dimension)
