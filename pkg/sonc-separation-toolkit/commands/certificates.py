"""check-cert and random-cert."""
import logging
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel

from certificate.generator import random_sonc
from certificate.models import CertificateSchema, VerificationReportSchema
from certificate.verify import verify
from commands.formatters import EXIT_NEGATIVE, EXIT_OK, CommandResult
from config import settings
from monitoring import CERTIFICATES_VERIFIED
from polycore.rationals import RationalLike, format_rational
from separation.claim import claim_audit
from separation.functional import SeparatingFunctional

logger = logging.getLogger("sonc_separation.commands")


# Request/Response Models
class ClaimAuditResponse(BaseModel):
    """L evaluated on a verified certificate, part by part."""
    u: str
    L_of_target: str
    part_values: List[str]
    amgm_bounds: List[float]


class CertificateCheckResponse(VerificationReportSchema):
    claim_audit: Optional[ClaimAuditResponse] = None


# PUBLIC_INTERFACE
def check_certificate(path: str, u: Optional[RationalLike] = None) -> CommandResult:
    """
    Verify a certificate file.

    Args:
        path: JSON file {"n": ..., "target": "...", "parts": ["...", ...]}
        u: When given and the certificate verifies, also evaluate L on it

    Returns:
        CommandResult with exit 0 iff the certificate verifies

    Raises:
        OSError: When the file cannot be read
        ValueError: When the file is not a valid certificate
    """
    schema = CertificateSchema.parse_raw(Path(path).read_text())
    cert = schema.to_certificate()
    report = verify(cert, max_workers=settings.thread_count())
    CERTIFICATES_VERIFIED.labels(ok=str(report.ok).lower()).inc()
    response = CertificateCheckResponse(**VerificationReportSchema.from_report(report).dict())
    if report.ok and u is not None:
        functional = SeparatingFunctional.create(cert.n, u)
        total, bounds = claim_audit(functional, cert)
        response.claim_audit = ClaimAuditResponse(
            u=format_rational(functional.u),
            L_of_target=format_rational(total),
            part_values=[format_rational(b.l_value) for b in bounds],
            amgm_bounds=[b.amgm_bound for b in bounds],
        )
    return CommandResult(exit_code=EXIT_OK if report.ok else EXIT_NEGATIVE, payload=response)


# PUBLIC_INTERFACE
def random_certificate(n: int, degree_bound: int, parts: int, seed: int) -> CommandResult:
    """
    Generate a certificate that verifies by construction.

    Returns:
        CommandResult whose payload is the certificate JSON
    """
    cert = random_sonc(n, degree_bound, part_count=parts, seed=seed, max_retries=settings.SAMPLING_RETRIES)
    logger.info(f"Generated certificate with {len(cert.parts)} parts for seed {seed}")
    return CommandResult(exit_code=EXIT_OK, payload=CertificateSchema.from_certificate(cert))
