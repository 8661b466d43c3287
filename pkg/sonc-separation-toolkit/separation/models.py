"""Separation report model and its JSON schema."""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from polycore.polynomial import SparsePolynomial, format_polynomial
from polycore.rationals import format_rational
from polycore.region import BoxRegion
from separation.functional import SeparatingFunctional
from separation.witness import SquareWitness


def fraction_to_float(value: Fraction) -> float:
    """Float rendering that saturates instead of raising on huge values."""
    try:
        return float(value)
    except OverflowError:
        return float("inf") if value > 0 else float("-inf")


# PUBLIC_INTERFACE
@dataclass(frozen=True)
class SeparationReport:
    """
    Certified lower bound on the distance from the witness to the SONC cone.

    Attributes:
        u: parameter of the functional
        region: the box the bound is stated on (after anchoring, if any)
        witness: the square witness f
        l_of_witness: L[f], exactly -f(u)
        lower_bound: f(u) / 4
        points_in_region: membership of the four evaluation points
        anchor: interior point a used to rescale the input box, if any
        original_region: the input box before anchoring
        original_witness: f(x1/a1, ..., xn/an), the witness on the input box
    """

    u: Fraction
    region: BoxRegion
    witness: SquareWitness
    l_of_witness: Fraction
    lower_bound: Fraction
    points_in_region: Tuple[bool, ...]
    anchor: Optional[Tuple[Fraction, ...]] = None
    original_region: Optional[BoxRegion] = None
    original_witness: Optional[SparsePolynomial] = None

    @property
    def d(self) -> int:
        return self.witness.d

    @property
    def n(self) -> int:
        return self.witness.n

    @property
    def functional(self) -> SeparatingFunctional:
        return SeparatingFunctional(n=self.n, u=self.u)


# Request/Response Models
class SeparationReportSchema(BaseModel):
    """SeparationReport JSON; rationals are "p/q" strings."""
    u: str
    d: int = Field(..., ge=3)
    n: int = Field(..., ge=1)
    K: List[List[str]]
    witness: str
    witness_factor: str
    L_of_witness: str
    lower_bound: str
    lower_bound_float: float
    points_in_K: List[bool]
    anchor: Optional[List[str]] = None
    original_K: Optional[List[List[str]]] = None
    original_witness: Optional[str] = None

    @classmethod
    def from_report(cls, report: SeparationReport) -> "SeparationReportSchema":
        return cls(
            u=format_rational(report.u),
            d=report.d,
            n=report.n,
            K=report.region.to_strings(),
            witness=format_polynomial(report.witness.polynomial),
            witness_factor=format_polynomial(report.witness.factor),
            L_of_witness=format_rational(report.l_of_witness),
            lower_bound=format_rational(report.lower_bound),
            lower_bound_float=fraction_to_float(report.lower_bound),
            points_in_K=list(report.points_in_region),
            anchor=[format_rational(a) for a in report.anchor] if report.anchor is not None else None,
            original_K=report.original_region.to_strings() if report.original_region is not None else None,
            original_witness=(
                format_polynomial(report.original_witness) if report.original_witness is not None else None
            ),
        )
