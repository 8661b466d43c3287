"""Recognition of circuit polynomials.

A circuit polynomial has support A u {b} (or A alone) where A is an affinely
independent set of even exponent vectors carrying positive coefficients and
b lies in the relative interior of conv(A). Partition rule:

  1. a single even term with positive coefficient is a degenerate circuit;
  2. a support point with a negative coefficient or an odd exponent vector
     must be b (two such points reject the polynomial);
  3. otherwise every support point is tried as b in ascending graded-lex
     order and the first one with strictly positive weights wins;
  4. otherwise the whole support is A and b is the first lattice point of
     conv(A), in ascending graded-lex order, with strictly positive weights.
"""
import logging
from fractions import Fraction
from itertools import product
from typing import List, Optional, Sequence

from circuit.linalg import InconsistentSystemError, SingularSystemError, rank, solve_exact
from circuit.models import CircuitData
from errors import CircuitRejection, NotACircuitError
from polycore.polynomial import ExponentVector, SparsePolynomial, grlex_key, is_even

logger = logging.getLogger("sonc_separation.circuit")


def is_affinely_independent(points: Sequence[ExponentVector]) -> bool:
    lifted = [list(alpha) + [1] for alpha in points]
    return rank(lifted) == len(points)


# PUBLIC_INTERFACE
def barycentric_weights(outer: Sequence[ExponentVector], inner: ExponentVector) -> List[Fraction]:
    """
    Solve sum(l_a * a) = inner, sum(l_a) = 1 exactly.

    Args:
        outer: Affinely independent exponent vectors
        inner: Target exponent vector

    Returns:
        The weights, aligned with outer

    Raises:
        NotACircuitError: affine_dependence when outer is affinely dependent,
            beta_outside_relative_interior when inner is off the affine hull
            or some weight is not strictly positive
    """
    columns = [list(alpha) + [1] for alpha in outer]
    rhs = list(inner) + [1]
    try:
        weights = solve_exact(columns, rhs)
    except SingularSystemError:
        raise NotACircuitError(CircuitRejection.AFFINE_DEPENDENCE, "outer exponent vectors are affinely dependent")
    except InconsistentSystemError:
        raise NotACircuitError(
            CircuitRejection.BETA_OUTSIDE_RELATIVE_INTERIOR,
            f"{inner} is not in the affine hull of the outer vectors",
        )
    if any(w <= 0 for w in weights):
        raise NotACircuitError(
            CircuitRejection.BETA_OUTSIDE_RELATIVE_INTERIOR,
            f"{inner} has a non-positive barycentric weight",
        )
    return weights


def _build(
    f: SparsePolynomial, outer: List[ExponentVector], inner: ExponentVector
) -> CircuitData:
    outer = sorted(outer, key=grlex_key, reverse=True)
    weights = barycentric_weights(outer, inner)
    return CircuitData(
        n=f.n,
        outer=tuple(outer),
        outer_coeffs=tuple(f.coefficient(alpha) for alpha in outer),
        inner=inner,
        inner_coeff=f.coefficient(inner),
        weights=tuple(weights),
    )


def _lattice_inner_point(outer: List[ExponentVector]) -> Optional[ExponentVector]:
    # Candidates lie in the bounding box of conv(outer); vertices never qualify.
    n = len(outer[0])
    lows = [min(alpha[i] for alpha in outer) for i in range(n)]
    highs = [max(alpha[i] for alpha in outer) for i in range(n)]
    candidates = sorted(
        product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs))), key=grlex_key
    )
    vertices = set(outer)
    for beta in candidates:
        if beta in vertices:
            continue
        try:
            barycentric_weights(outer, beta)
        except NotACircuitError:
            continue
        return beta
    return None


# PUBLIC_INTERFACE
def detect_circuit(f: SparsePolynomial) -> CircuitData:
    """
    Recognize f as a circuit polynomial and compute its barycentric weights.

    Args:
        f: Nonzero polynomial

    Returns:
        The CircuitData of f; reconstructing it gives back f exactly

    Raises:
        NotACircuitError: With a reason code when no circuit partition exists
    """
    if f.is_zero():
        raise NotACircuitError(CircuitRejection.ZERO_POLYNOMIAL, "the zero polynomial is not a circuit")
    terms = f.terms
    support = sorted(terms, key=grlex_key)

    if len(support) == 1:
        alpha = support[0]
        if terms[alpha] < 0:
            raise NotACircuitError(CircuitRejection.NEGATIVE_OUTER_COEFFICIENT, f"single term {alpha} is negative")
        if not is_even(alpha):
            raise NotACircuitError(CircuitRejection.NON_EVEN_OUTER_EXPONENT, f"single term {alpha} is not even")
        return CircuitData(
            n=f.n,
            outer=(alpha,),
            outer_coeffs=(terms[alpha],),
            inner=alpha,
            inner_coeff=Fraction(0),
            weights=(Fraction(1),),
        )

    forced = [alpha for alpha in support if terms[alpha] < 0 or not is_even(alpha)]
    if len(forced) > 1:
        raise NotACircuitError(
            CircuitRejection.MULTIPLE_INNER_POINTS,
            f"{len(forced)} support points are negative or odd: {forced}",
        )
    if forced:
        inner = forced[0]
        outer = [alpha for alpha in support if alpha != inner]
        logger.debug(f"Forced inner point {inner} for {f}")
        return _build(f, outer, inner)

    # All terms even and positive: look for a support point inside the others.
    last_error: Optional[NotACircuitError] = None
    for inner in support:
        outer = [alpha for alpha in support if alpha != inner]
        try:
            circuit = _build(f, outer, inner)
        except NotACircuitError as e:
            logger.debug(f"Inner candidate {inner} rejected: {e}")
            last_error = e
            continue
        return circuit

    if is_affinely_independent(support):
        inner = _lattice_inner_point(support)
        if inner is not None:
            logger.debug(f"Zero-coefficient inner point {inner} for {f}")
            return _build(f, list(support), inner)
        raise NotACircuitError(
            CircuitRejection.BETA_OUTSIDE_RELATIVE_INTERIOR,
            "no lattice point lies in the relative interior of the support's convex hull",
        )
    raise last_error if last_error is not None else NotACircuitError(CircuitRejection.AFFINE_DEPENDENCE)

