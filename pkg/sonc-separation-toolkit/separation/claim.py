"""Lower bounds for L on circuit polynomials.

For a circuit g the weighted AM-GM inequality together with the
log-convexity of phi gives

    L[g] >= (Theta_g + c_b) * phi(b1 * ln u)

and Theta_g + c_b >= 0 when g is nonnegative, hence L[g] >= 0 on the SONC
cone. The float side of this bound is a diagnostic; the exact value of L[g]
is what certifies.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from certificate.models import SoncCertificate
from certificate.verify import verify
from circuit.detection import detect_circuit
from circuit.models import CircuitData
from circuit.nonnegativity import circuit_number, circuit_number_power, is_nonnegative
from errors import ClaimViolationError
from separation.functional import SeparatingFunctional, apply_L, monomial_L_positive
from separation.models import fraction_to_float

logger = logging.getLogger("sonc_separation.separation")


@dataclass(frozen=True)
class ClaimBound:
    """Exact L[g] next to its AM-GM lower bound."""

    l_value: Fraction
    amgm_bound: float
    theta: float
    nonnegative: bool


# PUBLIC_INTERFACE
def claim_lower_bound(functional: SeparatingFunctional, circuit: CircuitData) -> ClaimBound:
    """
    Compute L[g] exactly and the bound (Theta_g + c_b) * phi(b1 ln u).

    The comparison is exact: with phi(b1 ln u) = L[x^b] > 0 the bound holds
    iff r = L[g] / L[x^b] - c_b satisfies r >= 0 and r ** q >= Theta_g ** q.
    The float bound is reported for diagnostics only.

    Args:
        functional: The functional L
        circuit: A valid circuit g

    Returns:
        ClaimBound with the exact value and the float bound

    Raises:
        ClaimViolationError: When L[g] falls below the bound, or when g is
            nonnegative and L[g] < 0
    """
    l_value = apply_L(functional, circuit.to_polynomial())
    # phi(b1 ln u) = 1 - u^b1 + u^(2 b1) + u^(3 b1)
    phi_value = monomial_L_positive(functional, circuit.inner[0])
    theta = circuit_number(circuit)
    bound = fraction_to_float((Fraction(theta) + circuit.inner_coeff) * phi_value) if math.isfinite(theta) else math.inf
    theta_q, q = circuit_number_power(circuit)
    r = l_value / phi_value - circuit.inner_coeff
    if r < 0 or r ** q < theta_q:
        raise ClaimViolationError(f"L[g] = {fraction_to_float(l_value)} is below the AM-GM bound {bound}")
    nonnegative = is_nonnegative(circuit)
    if nonnegative and l_value < 0:
        raise ClaimViolationError(f"L[g] = {l_value} < 0 for a nonnegative circuit")
    return ClaimBound(l_value=l_value, amgm_bound=bound, theta=theta, nonnegative=nonnegative)


# PUBLIC_INTERFACE
def claim_audit(functional: SeparatingFunctional, cert: SoncCertificate) -> Tuple[Fraction, Tuple[ClaimBound, ...]]:
    """
    Apply the Claim to every part of a verified certificate.

    Returns:
        (L[target], per-part bounds); L[target] is the exact sum of part values

    Raises:
        ClaimViolationError: When the certificate does not verify, or a bound fails
    """
    report = verify(cert, max_workers=1)
    if not report.ok:
        raise ClaimViolationError(f"Certificate does not verify: {report.failure_reason}")
    bounds = tuple(claim_lower_bound(functional, detect_circuit(p)) for p in cert.parts)
    total = apply_L(functional, cert.target)
    if total != sum((b.l_value for b in bounds), Fraction(0)):
        raise ClaimViolationError("L is not additive over the parts")
    if total < 0:
        raise ClaimViolationError(f"L[target] = {total} < 0 for a SONC target")
    logger.debug(f"Claim audit over {len(bounds)} parts: L[target] = {total}")
    return total, bounds
