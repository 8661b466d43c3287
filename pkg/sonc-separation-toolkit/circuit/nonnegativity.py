"""Circuit numbers and the exact nonnegativity criterion.

For a circuit g with weights l_a the circuit number is

    Theta_g = prod((c_a / l_a) ** l_a)

and g is nonnegative iff |c_b| <= Theta_g, or b is even and c_b >= -Theta_g.
Theta_g is usually irrational, so comparisons are done on q-th powers where
q is the common denominator of the weights: Theta_g ** q is rational.
"""
import logging
import math
from fractions import Fraction
from itertools import product
from typing import Iterator, Optional, Tuple

import numpy as np

from circuit.models import CircuitData
from polycore.polynomial import is_even
from polycore.rationals import rationalize

logger = logging.getLogger("sonc_separation.circuit")

Point = Tuple[Fraction, ...]


# PUBLIC_INTERFACE
def circuit_number_power(circuit: CircuitData) -> Tuple[Fraction, int]:
    """
    Exact q-th power of the circuit number.

    Args:
        circuit: A valid circuit

    Returns:
        (theta_q, q) with q the least common denominator of the weights and
        theta_q = Theta_g ** q
    """
    q = circuit.weight_denominator
    theta_q = Fraction(1)
    for c, w in zip(circuit.outer_coeffs, circuit.weights):
        exponent = w * q
        assert exponent.denominator == 1
        theta_q *= (c / w) ** int(exponent)
    return theta_q, q


def circuit_number(circuit: CircuitData) -> float:
    """Theta_g as a float, for diagnostics only; inf when it exceeds the float range."""
    log_theta = sum(
        float(w) * (math.log(c.numerator) - math.log(c.denominator) - math.log(w))
        for c, w in zip(circuit.outer_coeffs, circuit.weights)
    )
    try:
        return math.exp(log_theta)
    except OverflowError:
        return math.inf


# PUBLIC_INTERFACE
def is_nonnegative(circuit: CircuitData) -> bool:
    """
    Decide nonnegativity of a circuit polynomial on R^n exactly.

    Args:
        circuit: A valid circuit

    Returns:
        True iff the circuit polynomial is nonnegative everywhere
    """
    if circuit.is_degenerate:
        return True
    c_beta = circuit.inner_coeff
    if c_beta >= 0 and is_even(circuit.inner):
        return True
    theta_q, q = circuit_number_power(circuit)
    return abs(c_beta) ** q <= theta_q


def _analytic_candidates(circuit: CircuitData) -> Iterator[Tuple[float, ...]]:
    # Where |c_b| > Theta the minimum sits at t with
    # <a - b, t> = log(l_a * Theta / c_a), x = s * exp(t), s making c_b * x^b < 0.
    theta = circuit_number(circuit)
    rows = np.array([[a - b for a, b in zip(alpha, circuit.inner)] for alpha in circuit.outer], dtype=float)
    rhs = np.array([
        math.log(w) + math.log(theta) - math.log(c.numerator) + math.log(c.denominator)
        for c, w in zip(circuit.outer_coeffs, circuit.weights)
    ])
    t, *_ = np.linalg.lstsq(rows, rhs, rcond=None)
    magnitudes = np.exp(t)
    odd_axes = [i for i, b in enumerate(circuit.inner) if b % 2 == 1]
    sign_options = [(1,)] if circuit.inner_coeff < 0 else []
    if circuit.inner_coeff > 0 and odd_axes:
        flip = [1] * circuit.n
        flip[odd_axes[0]] = -1
        sign_options = [tuple(flip)]
    for signs in sign_options:
        signs = signs * circuit.n if len(signs) == 1 else signs
        for jitter in (1.0, 1.001, 0.999, 1.01, 0.99, 1.1, 0.9):
            yield tuple(s * m * jitter for s, m in zip(signs, magnitudes))


def _grid_candidates(n: int, levels: int) -> Iterator[Tuple[Fraction, ...]]:
    magnitudes = [Fraction(2) ** k for k in range(-levels, levels + 1)]
    for signs in product((1, -1), repeat=n):
        for mags in product(magnitudes, repeat=n):
            yield tuple(s * m for s, m in zip(signs, mags))


# PUBLIC_INTERFACE
def find_negative_point(circuit: CircuitData, budget: int = 4096) -> Optional[Tuple[Point, Fraction]]:
    """
    Search for a rational point where the circuit polynomial is negative.

    The analytic minimizer of the circuit is tried first (rationalized, with
    small jitters), then a signed geometric grid of powers of two. Every
    candidate is evaluated exactly.

    Args:
        circuit: A valid circuit
        budget: Maximum number of exact evaluations

    Returns:
        (point, value) with value < 0, or None when the budget runs out
    """
    g = circuit.to_polynomial()
    spent = 0

    def check(point) -> Optional[Tuple[Point, Fraction]]:
        value = g.evaluate(point)
        return (tuple(point), value) if value < 0 else None

    if not circuit.is_degenerate and circuit.inner_coeff != 0:
        try:
            analytic = list(_analytic_candidates(circuit))
        except (ValueError, OverflowError, np.linalg.LinAlgError) as e:
            logger.debug(f"Analytic minimizer unavailable: {e}")
            analytic = []
        for candidate in analytic:
            if spent >= budget:
                return None
            if not all(math.isfinite(x) and x != 0 for x in candidate):
                continue
            point = tuple(rationalize(x, 10 ** 9) for x in candidate)
            if any(v == 0 for v in point):
                continue
            spent += 1
            found = check(point)
            if found:
                return found

    levels = 0
    seen: set = set()
    while spent < budget:
        for point in _grid_candidates(circuit.n, levels):
            if point in seen:
                continue
            seen.add(point)
            spent += 1
            found = check(point)
            if found:
                return found
            if spent >= budget:
                return None
        levels += 1
    return None

