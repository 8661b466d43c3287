"""bound and phi-audit."""
import logging
from typing import Optional, Sequence

from pydantic import BaseModel

from commands.formatters import EXIT_NEGATIVE, EXIT_OK, CommandResult
from polycore.rationals import RationalLike, format_rational
from polycore.region import BoxRegion
from separation.bound import separation_bound
from separation.models import SeparationReportSchema
from separation.phi import convexity_polynomial, convexity_violation, convexity_witness, phi_identity_check

logger = logging.getLogger("sonc_separation.commands")

CONVEXITY_TOLERANCE = 1e-9


# Request/Response Models
class PhiAuditResponse(BaseModel):
    """Outcome of the phi audit."""
    identity_ok: bool
    p_at_1: str
    p_at_1_witness: str
    sweep_start: float
    sweep_stop: float
    sweep_step: float
    max_violation: float
    tolerance: float
    passed: bool


# PUBLIC_INTERFACE
def bound(
    specs: Sequence[str],
    d: int,
    n: int,
    u: Optional[RationalLike] = None,
    anchor: bool = False,
) -> CommandResult:
    """
    Compute the certified separation bound on a box.

    Args:
        specs: "lo:hi" interval specs, one per axis or one broadcast
        d: Degree of the witness' square root
        n: Number of variables
        u: Explicit parameter instead of choose_u
        anchor: Rescale the box to put the all-ones point inside first

    Returns:
        CommandResult with the SeparationReport

    Raises:
        InvalidRegionError: When the box specs are malformed
        InadmissibleConfigurationError: When a precondition fails
    """
    region = BoxRegion.parse(specs, n)
    report = separation_bound(region, d, n, u=u, anchor=anchor)
    return CommandResult(exit_code=EXIT_OK, payload=SeparationReportSchema.from_report(report))


# PUBLIC_INTERFACE
def phi_audit(start: float = 0.0, stop: float = 5.0, step: float = 0.01) -> CommandResult:
    """
    Check the exact p(y) identity and sweep ln(phi) for convexity.

    Returns:
        CommandResult with exit 0 when both checks pass, 1 otherwise
    """
    if not (step > 0 and stop > start):
        raise ValueError(f"Sweep needs step > 0 and stop > start, got [{start}, {stop}] step {step}")
    identity_ok = phi_identity_check()
    p_at_1 = convexity_polynomial().evaluate([1])
    p_at_1_witness = convexity_witness().evaluate([1])
    violation = convexity_violation(start, stop, step)
    passed = identity_ok and p_at_1 == p_at_1_witness and violation <= CONVEXITY_TOLERANCE
    if not passed:
        logger.error(f"phi audit failed: identity_ok={identity_ok} violation={violation}")
    return CommandResult(
        exit_code=EXIT_OK if passed else EXIT_NEGATIVE,
        payload=PhiAuditResponse(
            identity_ok=identity_ok,
            p_at_1=format_rational(p_at_1),
            p_at_1_witness=format_rational(p_at_1_witness),
            sweep_start=start,
            sweep_stop=stop,
            sweep_step=step,
            max_violation=violation,
            tolerance=CONVEXITY_TOLERANCE,
            passed=passed,
        ),
    )
