"""Exception types raised across the package."""


class VacampError(Exception):
    """Base class for all package-specific errors."""


class SymplecticViolation(VacampError):
    """Bogoliubov coefficients do not satisfy |alpha|^2 - |beta|^2 = 1."""


class ZeroSqueezing(VacampError):
    """Operation undefined at r = 0 (zero-temperature limit)."""


class StepSizeUnderflow(VacampError):
    """Adaptive ODE step control stalled."""


class NormDrift(VacampError):
    """Conserved inner-product norm drifted beyond the allowed budget."""


class FitDiverged(VacampError):
    """Spectral fit left the admissible temperature range."""


class InsideHorizon(VacampError):
    """Static-observer quantity requested at or inside the horizon radius."""


class ResidualExceeded(VacampError):
    """Functional-equation residual larger than the requested tolerance."""


class NonMonotone(VacampError):
    """Interpolated solution lost monotonicity (self-intersecting characteristics)."""


class OutOfGrid(VacampError):
    """Requested evaluation point outside the solved grid."""


class UnitarityLoss(VacampError):
    """Mode-matrix completeness residual too large (cutoff too small)."""


class SuppressedJunction(VacampError):
    """External flux drives the effective critical current to zero or below."""


class OverCritical(VacampError):
    """Bias current at or above the effective critical current."""


class NoHorizon(VacampError):
    """Pulse speed outside the range of the local speed of light."""


class ParseError(VacampError):
    """Config file could not be parsed; carries line/column when known."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class SchemaError(VacampError):
    """Config value failed schema validation; carries the offending key."""

    def __init__(self, message, key=None):
        super().__init__(message)
        self.key = key


class InsufficientWindowWarning(UserWarning):
    """Sampling window too short for the requested spectral content."""
