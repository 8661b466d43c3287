"""The function phi(t) = 1 - e^t + e^(2t) + e^(3t) and its log-convexity audit.

ln(phi) is convex on t >= 0. With y = e^t the condition
phi'' * phi - phi'^2 >= 0 becomes p(y) >= 0 on y >= 1 for

    p(y) = (-y + 4y^2 + 9y^3)(1 - y + y^2 + y^3) - (-y + 2y^2 + 3y^3)^2

and p(y) = y((y-1)^4 + 2(y-1)^2 + 12(y-1) + 8) exhibits this, since every
summand is nonnegative for y >= 1. Floats only appear in the diagnostics here.
"""
import logging
from typing import Union

import numpy as np

from polycore.polynomial import SparsePolynomial, variable

logger = logging.getLogger("sonc_separation.separation")

ArrayLike = Union[float, np.ndarray]


def phi(t: ArrayLike) -> ArrayLike:
    """phi(t) as a float (or elementwise on an array)."""
    e = np.exp(t)
    return 1.0 - e + e ** 2 + e ** 3


def convexity_polynomial() -> SparsePolynomial:
    """p(y), expanded exactly."""
    y = variable(1, 1)
    return (-y + 4 * y ** 2 + 9 * y ** 3) * (1 - y + y ** 2 + y ** 3) - (-y + 2 * y ** 2 + 3 * y ** 3) ** 2


def convexity_witness() -> SparsePolynomial:
    """y((y-1)^4 + 2(y-1)^2 + 12(y-1) + 8), expanded exactly."""
    y = variable(1, 1)
    s = y - 1
    return y * (s ** 4 + 2 * s ** 2 + 12 * s + 8)


# PUBLIC_INTERFACE
def phi_identity_check() -> bool:
    """True iff p(y) and its witness form expand to the same polynomial."""
    ok = convexity_polynomial() == convexity_witness()
    logger.debug(f"p(y) identity check: {ok}")
    return ok


def log_phi_second_differences(start: float = 0.0, stop: float = 5.0, step: float = 0.01) -> np.ndarray:
    """Second differences of ln(phi) on the grid start, start + step, ..., stop."""
    count = int(round((stop - start) / step)) + 1
    t = np.linspace(start, stop, count)
    log_phi = np.log(phi(t))
    return log_phi[2:] - 2.0 * log_phi[1:-1] + log_phi[:-2]


# PUBLIC_INTERFACE
def convexity_violation(start: float = 0.0, stop: float = 5.0, step: float = 0.01) -> float:
    """Largest negative second difference of ln(phi), as a positive number (0 if none)."""
    d2 = log_phi_second_differences(start, stop, step)
    return float(max(0.0, -d2.min()))
