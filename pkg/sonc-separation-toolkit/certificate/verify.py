"""Verification of SONC certificates.

The verifier trusts nothing in the certificate: each part is re-recognized as
a circuit, its nonnegativity is decided exactly, and the sum of parts is
compared with the target term by term.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from certificate.models import PartResult, SoncCertificate, VerificationReport
from circuit.detection import detect_circuit
from circuit.nonnegativity import circuit_number_power, is_nonnegative
from errors import NotACircuitError
from polycore.polynomial import SparsePolynomial, poly_sum
from polycore.rationals import format_rational

logger = logging.getLogger("sonc_separation.certificate")

NOT_NONNEGATIVE = "not_nonnegative"
RESIDUAL = "residual"


def check_part(index: int, part: SparsePolynomial) -> PartResult:
    """Recognize one part and decide its nonnegativity."""
    try:
        circuit = detect_circuit(part)
    except NotACircuitError as e:
        return PartResult(index=index, circuit=None, reason=e.reason.value, nonnegative=None, theta_q=None, q=None)
    theta_q, q = circuit_number_power(circuit)
    nonnegative = is_nonnegative(circuit)
    return PartResult(
        index=index,
        circuit=circuit,
        reason=None if nonnegative else NOT_NONNEGATIVE,
        nonnegative=nonnegative,
        theta_q=format_rational(theta_q),
        q=q,
    )


# PUBLIC_INTERFACE
def verify(cert: SoncCertificate, max_workers: Optional[int] = None) -> VerificationReport:
    """
    Verify a SONC certificate exactly.

    Parts are checked concurrently; the first failure is decided by list order
    after all checks have joined.

    Args:
        cert: The certificate to check
        max_workers: Thread cap for part checks (1 checks sequentially)

    Returns:
        VerificationReport; semantic failures are reported, not raised
    """
    indexed = list(enumerate(cert.parts))
    if max_workers == 1 or len(indexed) == 1:
        results = [check_part(i, p) for i, p in indexed]
    else:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            results = list(pool.map(lambda item: check_part(*item), indexed))

    residual = cert.target - poly_sum(cert.parts, cert.n)
    first_failure = next((r.index for r in results if not r.ok), None)
    if first_failure is not None:
        failure_reason = results[first_failure].reason
    elif not residual.is_zero():
        failure_reason = RESIDUAL
    else:
        failure_reason = None
    ok = failure_reason is None
    logger.info(
        f"Verified certificate with {len(results)} parts: ok={ok} first_failure={first_failure} reason={failure_reason}"
    )
    return VerificationReport(
        ok=ok,
        parts=tuple(results),
        residual=residual,
        first_failure=first_failure,
        failure_reason=failure_reason,
    )
