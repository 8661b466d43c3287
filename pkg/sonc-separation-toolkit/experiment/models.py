"""Attack configuration and result models."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, validator

from certificate.models import CertificateSchema, SoncCertificate
from config import settings
from polycore.rationals import format_rational
from separation.models import fraction_to_float

DEFAULT_STEP_SCHEDULE = [1.0, 0.5, 0.25, 0.1, 0.05, 0.02, 0.01]


# PUBLIC_INTERFACE
class AttackConfig(BaseModel):
    """
    Parameters of the randomized coordinate search.

    Defaults come from the global settings so they follow SONC_SEP_* overrides.
    """
    seed: int = Field(default=0, ge=0)
    parts: int = Field(default_factory=lambda: settings.ATTACK_PARTS, ge=1)
    budget: int = Field(default_factory=lambda: settings.ATTACK_BUDGET, ge=1)
    restarts: int = Field(default_factory=lambda: settings.ATTACK_RESTARTS, ge=1)
    resolution: int = Field(default_factory=lambda: settings.GRID_RESOLUTION, ge=8)
    verify_interval: int = Field(default_factory=lambda: settings.VERIFY_INTERVAL, ge=1)
    step_schedule: List[float] = Field(default_factory=lambda: list(DEFAULT_STEP_SCHEDULE), min_items=1)
    pool: Optional[List[List[int]]] = None

    @validator("step_schedule", each_item=True)
    def validate_step(cls, v):
        if not v > 0:
            raise ValueError("Step sizes must be positive")
        return v

    @validator("pool")
    def validate_pool(cls, v):
        if v is not None and not v:
            raise ValueError("An explicit support pool must not be empty")
        return v

    def step_size(self, iteration: int) -> float:
        """Step size for a 0-based iteration; the schedule is spread evenly over the budget."""
        stage = min(len(self.step_schedule) - 1, iteration * len(self.step_schedule) // self.budget)
        return self.step_schedule[stage]


@dataclass(frozen=True)
class TraceRow:
    """One certified improvement of a restart's incumbent."""

    iteration: int
    grid_norm_float: float
    four_point_gap: Fraction
    margin: Fraction

    @property
    def margin_float(self) -> float:
        return fraction_to_float(self.margin)


@dataclass(frozen=True)
class RestartOutcome:
    """Best certified candidate found by a single restart."""

    restart: int
    best_gap: Fraction
    best_grid_norm: float
    certificate: SoncCertificate
    trace: Tuple[TraceRow, ...]
    alarms: int
    certified: int


# PUBLIC_INTERFACE
@dataclass(frozen=True)
class AttackResult:
    """
    Merged outcome of all restarts.

    Attributes:
        best_gap: smallest exact four-point gap over certified candidates
        best_grid_norm: float grid sup-norm of |f - g| for that candidate
        lower_bound: the certified bound f(u)/4
        margin: best_gap - lower_bound, never negative unless alarmed
        best_restart: restart that produced best_gap (ties go to the lower index)
        certificate: the winning candidate, verified as SONC
        trace: certified improvements of the winning restart
        alarms: number of verified candidates that beat the bound
        iterations: total search iterations across restarts
        certified: total exact verifications across restarts
    """

    best_gap: Fraction
    best_grid_norm: float
    lower_bound: Fraction
    margin: Fraction
    best_restart: int
    certificate: SoncCertificate
    trace: Tuple[TraceRow, ...]
    alarms: int
    iterations: int
    certified: int

    @property
    def alarm(self) -> bool:
        return self.alarms > 0 or self.margin < 0


# Request/Response Models
class TraceRowSchema(BaseModel):
    iteration: int
    grid_norm_float: float
    four_point_gap_rational: str
    margin_float: float

    @classmethod
    def from_row(cls, row: TraceRow) -> "TraceRowSchema":
        return cls(
            iteration=row.iteration,
            grid_norm_float=row.grid_norm_float,
            four_point_gap_rational=format_rational(row.four_point_gap),
            margin_float=row.margin_float,
        )


class AttackResultSchema(BaseModel):
    best_gap: str
    best_gap_float: float
    best_grid_norm: float
    lower_bound: str
    margin: str
    margin_float: float
    best_restart: int
    alarm: bool
    alarms: int
    iterations: int
    certified: int
    certificate: CertificateSchema
    trace: List[TraceRowSchema]
    system: Dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def from_result(cls, result: AttackResult, system: Optional[Dict[str, Any]] = None) -> "AttackResultSchema":
        return cls(
            best_gap=format_rational(result.best_gap),
            best_gap_float=fraction_to_float(result.best_gap),
            best_grid_norm=result.best_grid_norm,
            lower_bound=format_rational(result.lower_bound),
            margin=format_rational(result.margin),
            margin_float=fraction_to_float(result.margin),
            best_restart=result.best_restart,
            alarm=result.alarm,
            alarms=result.alarms,
            iterations=result.iterations,
            certified=result.certified,
            certificate=CertificateSchema.from_certificate(result.certificate),
            trace=[TraceRowSchema.from_row(r) for r in result.trace],
            system=system or {},
        )
