"""Exception hierarchy for the SONC separation toolkit.

Errors that describe a bad input value also subclass ValueError so callers
that only know the builtin can still catch them.
"""

from enum import Enum
from typing import Optional


class SoncError(Exception):
    """Base class for every error raised by the toolkit."""


class PolynomialSyntaxError(SoncError, ValueError):
    """Raised when polynomial text does not follow the grammar.

    Attributes:
        position: 0-based character offset of the offending token
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DimensionMismatchError(SoncError, ValueError):
    """Raised when operands live in different numbers of variables."""


class InvalidScalingError(SoncError, ValueError):
    """Raised when a rescaling vector has a zero entry."""


class InvalidRegionError(SoncError, ValueError):
    """Raised for malformed or empty-interior box regions."""


class CircuitRejection(str, Enum):
    ZERO_POLYNOMIAL = "zero_polynomial"
    NON_EVEN_OUTER_EXPONENT = "non_even_outer_exponent"
    NEGATIVE_OUTER_COEFFICIENT = "negative_outer_coefficient"
    AFFINE_DEPENDENCE = "affine_dependence"
    BETA_OUTSIDE_RELATIVE_INTERIOR = "beta_outside_relative_interior"
    MULTIPLE_INNER_POINTS = "multiple_inner_points"


class NotACircuitError(SoncError):
    """Raised when a polynomial admits no circuit partition of its support.

    Attributes:
        reason: machine-readable rejection code
        detail: human-readable explanation
    """

    def __init__(self, reason: CircuitRejection, detail: Optional[str] = None):
        message = reason.value if detail is None else f"{reason.value}: {detail}"
        super().__init__(message)
        self.reason = reason
        self.detail = detail


class InadmissibleConfigurationError(SoncError, ValueError):
    """Raised when a separation or attack configuration violates a precondition."""


class SamplingError(SoncError):
    """Raised when random circuit generation cannot produce a circuit."""


class ClaimViolationError(SoncError, AssertionError):
    """Raised when an exact check of the separating functional fails."""


class SoundnessAlarm(SoncError):
    """Raised when a verified SONC candidate beats the certified lower bound."""
