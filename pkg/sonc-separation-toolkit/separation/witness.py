"""The square witness f = (x1 - 1)^2 (x1 - u^2)^2 (x1 - u^3)^(2(d-2)).

f is nonnegative as a square and vanishes at three of the four evaluation
points of L, so L[f] = -f(u) < 0.
"""
from dataclasses import dataclass
from fractions import Fraction

from errors import InadmissibleConfigurationError
from polycore.polynomial import SparsePolynomial, constant, variable
from polycore.rationals import RationalLike, to_rational


# PUBLIC_INTERFACE
@dataclass(frozen=True)
class SquareWitness:
    """
    A witness polynomial stored with its square root.

    Attributes:
        u: the functional's parameter
        d: degree of the factor
        factor: h = (x1 - 1)(x1 - u^2)(x1 - u^3)^(d-2)
        polynomial: f = h * h
    """

    u: Fraction
    d: int
    factor: SparsePolynomial
    polynomial: SparsePolynomial

    @property
    def n(self) -> int:
        return self.polynomial.n

    def value_at(self, x1: RationalLike) -> Fraction:
        """f evaluated with x1 given and the other variables arbitrary."""
        return self.polynomial.evaluate((to_rational(x1),) + (Fraction(1),) * (self.n - 1))


# PUBLIC_INTERFACE
def build_witness(u: RationalLike, d: int, n: int) -> SquareWitness:
    """
    Build the witness of degree 2d in n variables.

    Args:
        u: Rational parameter, u > 1
        d: Degree of the square root, d >= 3
        n: Number of variables

    Returns:
        SquareWitness with exact expansion and its factor

    Raises:
        InadmissibleConfigurationError: When d < 3 or u <= 1
    """
    u = to_rational(u)
    if d < 3:
        raise InadmissibleConfigurationError(f"The witness needs d >= 3, got d = {d}")
    if not u > 1:
        raise InadmissibleConfigurationError(f"The witness needs u > 1, got u = {u}")
    x1 = variable(n, 1)
    one = constant(n, 1)
    factor = (x1 - one) * (x1 - u ** 2) * (x1 - u ** 3) ** (d - 2)
    polynomial = factor * factor
    return SquareWitness(u=u, d=d, factor=factor, polynomial=polynomial)
