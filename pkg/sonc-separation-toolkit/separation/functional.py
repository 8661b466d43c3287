"""The separating functional L.

    L[f] = f(1, 1..1) - f(u, 1..1) + f(u^2, 1..1) + f(u^3, 1..1)

with a rational u > 1, so every value of L is an exact rational.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, Tuple

from errors import ClaimViolationError, DimensionMismatchError, InadmissibleConfigurationError
from polycore.polynomial import SparsePolynomial
from polycore.rationals import RationalLike, to_rational


# PUBLIC_INTERFACE
@dataclass(frozen=True)
class SeparatingFunctional:
    """
    Four-point evaluation functional along the first axis.

    Attributes:
        n: number of variables
        u: rational parameter, strictly greater than 1
    """

    n: int
    u: Fraction

    SIGNS: ClassVar[Tuple[int, int, int, int]] = (1, -1, 1, 1)

    def __post_init__(self):
        object.__setattr__(self, "u", to_rational(self.u))
        if self.n < 1:
            raise InadmissibleConfigurationError(f"Dimension must be at least 1, got {self.n}")
        if not self.u > 1:
            raise InadmissibleConfigurationError(f"u must be greater than 1, got {self.u}")

    @classmethod
    def create(cls, n: int, u: RationalLike) -> "SeparatingFunctional":
        return cls(n=n, u=to_rational(u))

    @property
    def points(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """The evaluation points (u^j, 1, ..., 1) for j = 0..3."""
        tail = (Fraction(1),) * (self.n - 1)
        return tuple((self.u ** j,) + tail for j in range(4))

    def _check(self, f: SparsePolynomial) -> None:
        if f.n != self.n:
            raise DimensionMismatchError(f"Functional is in {self.n} variables, polynomial in {f.n}")

    def values(self, f: SparsePolynomial) -> Tuple[Fraction, ...]:
        self._check(f)
        return tuple(f.evaluate(p) for p in self.points)

    def __call__(self, f: SparsePolynomial) -> Fraction:
        return sum((s * v for s, v in zip(self.SIGNS, self.values(f))), Fraction(0))


# PUBLIC_INTERFACE
def apply_L(functional: SeparatingFunctional, f: SparsePolynomial) -> Fraction:
    """
    Exact value f(1) - f(u) + f(u^2) + f(u^3) along the first axis.

    Raises:
        DimensionMismatchError: When f is not in functional.n variables
    """
    return functional(f)


# PUBLIC_INTERFACE
def monomial_L_positive(functional: SeparatingFunctional, beta1: int) -> Fraction:
    """
    Value of L on a monomial whose first exponent is beta1.

    L[x^b] = 1 - u^b1 + u^(2 b1) + u^(3 b1), positive because u^(2 b1) >= u^b1.

    Raises:
        ClaimViolationError: When the exact value is not positive
    """
    if beta1 < 0:
        raise ValueError(f"Exponent must be nonnegative, got {beta1}")
    base = functional.u ** beta1
    value = 1 - base + base ** 2 + base ** 3
    if not value > 0:
        raise ClaimViolationError(f"L[x1^{beta1}] = {value} is not positive for u = {functional.u}")
    return value


# PUBLIC_INTERFACE
def four_point_gap(functional: SeparatingFunctional, f: SparsePolynomial, g: SparsePolynomial) -> Fraction:
    """
    max_j |g - f| at the four evaluation points.

    This is a certified lower bound on ||g - f||_K whenever the four points
    lie in K.
    """
    diff = g - f
    return max(abs(v) for v in functional.values(diff))
