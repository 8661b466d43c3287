"""Random generation of circuit polynomials and SONC certificates.

Generation is deterministic under a seed. Interior points are found by
rounding a random convex combination of the outer vectors to the lattice and
re-solving for the weights; failed draws are retried a bounded number of
times before the outer set is shrunk by one point. A single outer point is a
degenerate circuit, so generation always terminates.
"""
import logging
import random
from fractions import Fraction
from itertools import product
from typing import Iterable, List, Optional, Sequence, Tuple

from tenacity import Retrying, retry_if_exception_type, stop_after_attempt

from certificate.models import SoncCertificate
from circuit.detection import barycentric_weights, is_affinely_independent
from circuit.models import CircuitData
from circuit.nonnegativity import circuit_number, is_nonnegative
from errors import NotACircuitError, SamplingError
from polycore.polynomial import ExponentVector, is_even, poly_sum
from polycore.rationals import rationalize

logger = logging.getLogger("sonc_separation.certificate")

COEFFICIENT_DENOMINATOR = 10 ** 6


class _DrawRejected(Exception):
    """A random draw did not produce a usable configuration."""


# PUBLIC_INTERFACE
def even_lattice_pool(n: int, degree_bound: int, per_coordinate: bool = False) -> List[ExponentVector]:
    """
    Even exponent vectors within a degree bound.

    Args:
        n: Number of variables
        degree_bound: Bound 2d on the total degree, or on every coordinate
        per_coordinate: Bound each coordinate instead of the total degree

    Returns:
        The vectors in ascending graded-lex order
    """
    evens = range(0, degree_bound + 1, 2)
    points = [alpha for alpha in product(evens, repeat=n) if per_coordinate or sum(alpha) <= degree_bound]
    return sorted(points, key=lambda alpha: (sum(alpha), alpha))


def validated_pool(n: int, pool: Iterable[Sequence[int]], degree_bound: Optional[int]) -> List[ExponentVector]:
    """Deduplicate, sort and check a caller-supplied support pool."""
    cleaned = sorted({tuple(int(a) for a in alpha) for alpha in pool}, key=lambda alpha: (sum(alpha), alpha))
    for alpha in cleaned:
        if len(alpha) != n or any(a < 0 for a in alpha):
            raise ValueError(f"Pool point {alpha} is not an exponent vector in {n} variables")
        if not is_even(alpha):
            raise ValueError(f"Pool point {alpha} is not even")
        if degree_bound is not None and sum(alpha) > degree_bound:
            raise ValueError(f"Pool point {alpha} exceeds the degree bound {degree_bound}")
    if not cleaned:
        raise SamplingError("The support pool is empty; no circuit can be formed")
    return cleaned


def _draw_outer(rng: random.Random, pool: List[ExponentVector], size: int) -> List[ExponentVector]:
    outer = rng.sample(pool, size)
    if not is_affinely_independent(outer):
        raise _DrawRejected("affinely dependent outer set")
    return outer


def _draw_inner(rng: random.Random, outer: List[ExponentVector]) -> Tuple[ExponentVector, List[Fraction]]:
    mix = [rng.randint(1, 64) for _ in outer]
    total = sum(mix)
    n = len(outer[0])
    point = tuple(round(Fraction(sum(m * alpha[i] for m, alpha in zip(mix, outer)), total)) for i in range(n))
    if point in outer:
        raise _DrawRejected("rounded onto a vertex")
    try:
        weights = barycentric_weights(outer, point)
    except NotACircuitError as e:
        raise _DrawRejected(str(e))
    return point, weights


def _retrying(max_retries: int) -> Retrying:
    return Retrying(
        stop=stop_after_attempt(max_retries),
        retry=retry_if_exception_type(_DrawRejected),
        reraise=True,
    )


def _inner_coefficient(rng: random.Random, circuit: CircuitData, nonnegative: bool) -> Fraction:
    theta = circuit_number(circuit)
    odd = not is_even(circuit.inner)
    if not nonnegative:
        value = rationalize(rng.uniform(-2.0, 2.0) * theta, 10 ** 4)
        return value if value != 0 else Fraction(-1, 10 ** 4)
    if rng.random() < 0.25:
        # boundary case |c_b| = Theta, up to rationalization
        sign = rng.choice((-1, 1)) if odd else -1
        value = rationalize(sign * theta, COEFFICIENT_DENOMINATOR)
    else:
        high = 1.0 if odd else 3.0
        value = rationalize(rng.uniform(-1.0, high) * theta, COEFFICIENT_DENOMINATOR)
    if value == 0:
        value = Fraction(1, COEFFICIENT_DENOMINATOR)
    # rationalization may overshoot Theta by a hair
    while not is_nonnegative(circuit.with_coefficients(circuit.outer_coeffs, value)):
        value *= Fraction(1023, 1024)
    return value


# PUBLIC_INTERFACE
def sample_circuit(
    rng: random.Random,
    n: int,
    pool: Sequence[ExponentVector],
    nonnegative: bool = True,
    max_retries: int = 100,
) -> CircuitData:
    """
    Draw a random circuit polynomial supported on pool points.

    Args:
        rng: Random source; the result is a function of its state
        n: Number of variables
        pool: Even exponent vectors available for the outer set
        nonnegative: Keep c_b inside the nonnegativity region; otherwise draw
            c_b from [-2 Theta, 2 Theta]
        max_retries: Draws per outer-set size before shrinking

    Returns:
        The circuit

    Raises:
        SamplingError: When the pool is empty
    """
    pool = validated_pool(n, pool, None)
    size = rng.randint(1, min(n + 1, len(pool)))
    while size > 1:
        try:
            outer = _retrying(max_retries)(_draw_outer, rng, pool, size)
            inner, weights = _retrying(max_retries)(_draw_inner, rng, outer)
        except _DrawRejected as e:
            logger.debug(f"Shrinking outer set from {size} points: {e}")
            size -= 1
            continue
        coeffs = tuple(Fraction(rng.randint(1, 12), rng.randint(1, 4)) for _ in outer)
        circuit = CircuitData(
            n=n,
            outer=tuple(outer),
            outer_coeffs=coeffs,
            inner=inner,
            inner_coeff=Fraction(0),
            weights=tuple(weights),
        )
        return circuit.with_coefficients(coeffs, _inner_coefficient(rng, circuit, nonnegative))
    alpha = rng.choice(pool)
    return CircuitData(
        n=n,
        outer=(alpha,),
        outer_coeffs=(Fraction(rng.randint(1, 12), rng.randint(1, 4)),),
        inner=alpha,
        inner_coeff=Fraction(0),
        weights=(Fraction(1),),
    )


# PUBLIC_INTERFACE
def random_sonc(
    n: int,
    degree_bound: int,
    pool: Optional[Iterable[Sequence[int]]] = None,
    part_count: int = 3,
    seed: int = 0,
    max_retries: int = 100,
) -> SoncCertificate:
    """
    Generate a certificate that verifies by construction.

    Args:
        n: Number of variables
        degree_bound: Bound 2d on the total degree of pool points
        pool: Even exponent vectors to build circuits from; defaults to all
            even vectors of total degree at most degree_bound
        part_count: Number of circuit parts
        seed: Seed making the output deterministic
        max_retries: Interior-point draws before an outer set is shrunk

    Returns:
        SoncCertificate whose target is the exact sum of its parts

    Raises:
        SamplingError: When the pool is empty
    """
    if part_count < 1:
        raise ValueError("part_count must be at least 1")
    points = even_lattice_pool(n, degree_bound) if pool is None else validated_pool(n, pool, degree_bound)
    rng = random.Random(seed)
    circuits = [sample_circuit(rng, n, points, nonnegative=True, max_retries=max_retries) for _ in range(part_count)]
    parts = tuple(c.to_polynomial() for c in circuits)
    logger.debug(f"Generated {part_count}-part certificate for seed {seed}")
    return SoncCertificate(n=n, target=poly_sum(parts, n), parts=parts)
