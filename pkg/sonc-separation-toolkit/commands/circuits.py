"""check-circuit: recognize a circuit polynomial and decide its nonnegativity."""
import logging
from typing import List, Optional

from pydantic import BaseModel

from circuit.detection import detect_circuit
from circuit.models import CircuitDataSchema
from circuit.nonnegativity import circuit_number, circuit_number_power, find_negative_point, is_nonnegative
from commands.formatters import EXIT_NEGATIVE, EXIT_OK, CommandResult
from config import settings
from errors import NotACircuitError
from monitoring import CIRCUITS_CHECKED
from polycore.parser import parse
from polycore.polynomial import format_polynomial
from polycore.rationals import format_rational

logger = logging.getLogger("sonc_separation.commands")


# Request/Response Models
class CircuitCheckResponse(BaseModel):
    """Outcome of check-circuit."""
    polynomial: str
    n: int
    is_circuit: bool
    reason: Optional[str] = None
    detail: Optional[str] = None
    circuit: Optional[CircuitDataSchema] = None
    nonnegative: Optional[bool] = None
    theta_q: Optional[str] = None
    q: Optional[int] = None
    theta_float: Optional[float] = None
    negative_point: Optional[List[str]] = None
    negative_value: Optional[str] = None


# PUBLIC_INTERFACE
def check_circuit(text: str, n: int) -> CommandResult:
    """
    Parse a polynomial, detect its circuit structure and decide nonnegativity.

    Args:
        text: Polynomial in the text grammar
        n: Number of variables

    Returns:
        CommandResult with exit 0 iff the input is a nonnegative circuit

    Raises:
        PolynomialSyntaxError: When the text does not parse
    """
    f = parse(text, n)
    canonical = format_polynomial(f)
    try:
        circuit = detect_circuit(f)
    except NotACircuitError as e:
        CIRCUITS_CHECKED.labels(verdict="not_a_circuit").inc()
        logger.info(f"Not a circuit: {e}")
        return CommandResult(
            exit_code=EXIT_NEGATIVE,
            payload=CircuitCheckResponse(
                polynomial=canonical, n=n, is_circuit=False, reason=e.reason.value, detail=e.detail
            ),
        )

    theta_q, q = circuit_number_power(circuit)
    nonnegative = is_nonnegative(circuit)
    response = CircuitCheckResponse(
        polynomial=canonical,
        n=n,
        is_circuit=True,
        circuit=CircuitDataSchema.from_circuit(circuit),
        nonnegative=nonnegative,
        theta_q=format_rational(theta_q),
        q=q,
        theta_float=circuit_number(circuit),
    )
    if not nonnegative:
        found = find_negative_point(circuit, budget=settings.NEGATIVE_POINT_BUDGET)
        if found is not None:
            point, value = found
            response.negative_point = [format_rational(v) for v in point]
            response.negative_value = format_rational(value)
    CIRCUITS_CHECKED.labels(verdict="nonnegative" if nonnegative else "negative").inc()
    return CommandResult(exit_code=EXIT_OK if nonnegative else EXIT_NEGATIVE, payload=response)
