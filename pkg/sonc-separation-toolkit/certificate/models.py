"""SONC certificate and verification report models."""
from dataclasses import dataclass
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, validator

from circuit.models import CircuitData, CircuitDataSchema
from errors import DimensionMismatchError
from polycore.parser import parse
from polycore.polynomial import SparsePolynomial, format_polynomial


# PUBLIC_INTERFACE
@dataclass(frozen=True)
class SoncCertificate:
    """
    A claimed decomposition of target into nonnegative circuit polynomials.

    Attributes:
        n: number of variables
        target: the polynomial claimed to be SONC
        parts: the claimed circuit polynomials
    """

    n: int
    target: SparsePolynomial
    parts: Tuple[SparsePolynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("A certificate needs at least one part")
        for p in (self.target, *self.parts):
            if p.n != self.n:
                raise DimensionMismatchError(f"Certificate polynomial in {p.n} variables, expected {self.n}")


@dataclass(frozen=True)
class PartResult:
    """Outcome of checking one part of a certificate."""

    index: int
    circuit: Optional[CircuitData]
    reason: Optional[str]
    nonnegative: Optional[bool]
    theta_q: Optional[str]
    q: Optional[int]

    @property
    def ok(self) -> bool:
        return self.circuit is not None and bool(self.nonnegative)


# PUBLIC_INTERFACE
@dataclass(frozen=True)
class VerificationReport:
    """
    Result of verifying a SoncCertificate.

    Attributes:
        ok: every part is a nonnegative circuit and the residual is zero
        parts: per-part results in certificate order
        residual: target minus the sum of parts, exactly
        first_failure: index of the first failing part, if any
        failure_reason: reason code of the first failure, or "residual"
    """

    ok: bool
    parts: Tuple[PartResult, ...]
    residual: SparsePolynomial
    first_failure: Optional[int]
    failure_reason: Optional[str]


# Request/Response Models
class CertificateSchema(BaseModel):
    """Certificate JSON: polynomials are given in the text format."""
    n: int = Field(..., ge=1)
    target: str = Field(..., min_length=1)
    parts: List[str] = Field(..., min_items=1)

    @validator("parts", each_item=True)
    def validate_part(cls, v):
        if not v.strip():
            raise ValueError("Empty polynomial text")
        return v

    def to_certificate(self) -> SoncCertificate:
        return SoncCertificate(
            n=self.n,
            target=parse(self.target, self.n),
            parts=tuple(parse(p, self.n) for p in self.parts),
        )

    @classmethod
    def from_certificate(cls, cert: SoncCertificate) -> "CertificateSchema":
        return cls(
            n=cert.n,
            target=format_polynomial(cert.target),
            parts=[format_polynomial(p) for p in cert.parts],
        )


class PartResultSchema(BaseModel):
    index: int
    ok: bool
    is_circuit: bool
    reason: Optional[str] = None
    nonnegative: Optional[bool] = None
    theta_q: Optional[str] = None
    q: Optional[int] = None
    circuit: Optional[CircuitDataSchema] = None


class VerificationReportSchema(BaseModel):
    ok: bool
    first_failure: Optional[int] = None
    failure_reason: Optional[str] = None
    residual: str
    parts: List[PartResultSchema]

    @classmethod
    def from_report(cls, report: VerificationReport) -> "VerificationReportSchema":
        return cls(
            ok=report.ok,
            first_failure=report.first_failure,
            failure_reason=report.failure_reason,
            residual=format_polynomial(report.residual),
            parts=[
                PartResultSchema(
                    index=p.index,
                    ok=p.ok,
                    is_circuit=p.circuit is not None,
                    reason=p.reason,
                    nonnegative=p.nonnegative,
                    theta_q=p.theta_q,
                    q=p.q,
                    circuit=CircuitDataSchema.from_circuit(p.circuit) if p.circuit is not None else None,
                )
                for p in report.parts
            ],
        )

