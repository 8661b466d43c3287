"""attack: search for SONC candidates beating the certified bound."""
import logging
from pathlib import Path
from typing import Optional, Sequence

from pydantic import BaseModel

from commands.formatters import EXIT_ALARM, EXIT_OK, CommandResult, table_csv
from experiment.attack import attack
from experiment.models import AttackConfig, AttackResultSchema
from monitoring import ATTACK_ITERATIONS, SOUNDNESS_ALARMS, get_system_metrics
from polycore.rationals import RationalLike
from polycore.region import BoxRegion
from separation.bound import separation_bound
from separation.models import SeparationReportSchema

logger = logging.getLogger("sonc_separation.commands")

TRACE_COLUMNS = ["iteration", "grid_norm_float", "four_point_gap_rational", "margin_float"]


# Request/Response Models
class AttackSummary(BaseModel):
    """Summary JSON: the separation report and the attack result."""
    report: SeparationReportSchema
    result: AttackResultSchema
    trace_path: Optional[str] = None


# PUBLIC_INTERFACE
def run_attack(
    specs: Sequence[str],
    d: int,
    n: int,
    cfg: AttackConfig,
    u: Optional[RationalLike] = None,
    anchor: bool = False,
    trace_path: Optional[str] = None,
) -> CommandResult:
    """
    Compute the bound, attack it and report the margin.

    Args:
        specs: "lo:hi" interval specs for K
        d: Degree of the witness' square root
        n: Number of variables
        cfg: Search parameters
        u: Explicit parameter instead of choose_u
        anchor: Rescale K first
        trace_path: Where to write the CSV trace of certified improvements

    Returns:
        CommandResult with exit 0 when the margin stayed nonnegative, 3 on a
        soundness alarm
    """
    region = BoxRegion.parse(specs, n)
    report = separation_bound(region, d, n, u=u, anchor=anchor)
    result = attack(report, cfg)
    ATTACK_ITERATIONS.inc(result.iterations)
    if result.alarms:
        SOUNDNESS_ALARMS.inc(result.alarms)

    schema = AttackResultSchema.from_result(result, system=get_system_metrics())
    rows = [row.dict() for row in schema.trace]
    if trace_path is not None:
        Path(trace_path).write_text(table_csv(rows, TRACE_COLUMNS))
        logger.info(f"Trace written to {trace_path}")
    return CommandResult(
        exit_code=EXIT_ALARM if result.alarm else EXIT_OK,
        payload=AttackSummary(report=SeparationReportSchema.from_report(report), result=schema, trace_path=trace_path),
        rows=rows,
        columns=TRACE_COLUMNS,
    )
