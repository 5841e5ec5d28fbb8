"""Exception hierarchy for satrep.

Each error class carries the process exit code the CLI maps it to.
"""

from typing import Optional


class SatrepError(Exception):
    """Base class for all satrep errors."""

    exit_code: int = 1


class ConfigurationError(SatrepError):
    """Invalid scenario, preset or data file."""

    exit_code = 2


class UsageError(SatrepError):
    """Invalid command-line usage, e.g. an empty sweep grid."""

    exit_code = 2


class NumericalError(SatrepError):
    """A numerical routine could not produce a trustworthy result."""

    exit_code = 3


class FarFieldViolationError(NumericalError):
    """Slant range too short for the Fraunhofer (far-field) diffraction model."""

    def __init__(self, slant_range_m: float, fresnel_distance_m: float):
        self.slant_range_m = slant_range_m
        self.fresnel_distance_m = fresnel_distance_m
        super().__init__(
            f"slant range {slant_range_m / 1e3:.1f} km is inside the far-field "
            f"limit {fresnel_distance_m / 1e3:.1f} km"
        )


class QuadratureError(NumericalError):
    """Adaptive quadrature missed its absolute tolerance."""

    def __init__(self, residual: float, tolerance: float, detail: Optional[str] = None):
        self.residual = residual
        self.tolerance = tolerance
        message = f"quadrature residual {residual:.3e} exceeds tolerance {tolerance:.1e}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class EmptyWindowError(SatrepError):
    """No mutual-visibility window exists for the requested geometry."""

    exit_code = 0


class ReplayMismatchError(NumericalError):
    """A replayed manifest produced different output digests."""


class SweepPointError(SatrepError):
    """A single sweep point failed; keeps the original exit code.

    Takes plain arguments so it survives pickling out of worker processes.
    """

    def __init__(self, message: str, exit_code: int = 1):
        super().__init__(message, exit_code)
        self.exit_code = exit_code

    def __str__(self) -> str:
        return self.args[0]
