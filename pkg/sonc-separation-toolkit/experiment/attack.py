"""Randomized search for SONC polynomials close to the witness.

Each restart fixes a set of circuit supports drawn from an even lattice pool
and runs a coordinate search over the circuit coefficients in floats,
minimizing max |g - f| over a grid of K that includes the four evaluation
points of L. Outer coefficients move multiplicatively so they stay positive;
c_b is clamped into the float nonnegativity interval after every step.

Floats only steer the search. The incumbent is periodically rationalized,
c_b is halved until the exact circuit-number test passes, and the resulting
certificate is verified exactly before its four-point gap is compared with
the certified bound. A verified candidate beating the bound is a soundness
alarm.
"""
import logging
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from certificate.generator import even_lattice_pool, sample_circuit, validated_pool
from certificate.models import SoncCertificate
from certificate.verify import verify
from circuit.models import CircuitData
from circuit.nonnegativity import is_nonnegative
from config import settings
from errors import SoundnessAlarm
from experiment.grid import float_grid, monomial_columns
from experiment.models import AttackConfig, AttackResult, RestartOutcome, TraceRow
from polycore.polynomial import SparsePolynomial, is_even, poly_sum
from polycore.rationals import rationalize
from separation.functional import four_point_gap
from separation.models import SeparationReport

logger = logging.getLogger("sonc_separation.experiment")

INITIAL_SCALE = 2.0 ** -10


@dataclass
class _Part:
    structure: CircuitData
    outer: np.ndarray
    inner: float
    outer_columns: np.ndarray
    inner_column: Optional[np.ndarray]

    @property
    def even_inner(self) -> bool:
        return is_even(self.structure.inner)

    def values(self) -> np.ndarray:
        out = self.outer @ self.outer_columns
        if self.inner_column is not None:
            out = out + self.inner * self.inner_column
        return out


def _theta(outer: np.ndarray, weights: np.ndarray) -> float:
    return float(np.exp(np.sum(weights * np.log(outer / weights))))


def _project(value: float, theta: float, even: bool) -> float:
    if even:
        return max(value, -theta)
    return min(max(value, -theta), theta)


def _positive_rational(x: float, max_denominator: int) -> Fraction:
    return max(rationalize(x, max_denominator), Fraction(1, max_denominator))


def _rationalized_circuit(part: _Part, max_denominator: int, halvings: int) -> CircuitData:
    """Exact circuit near the float part, shrinking c_b until it is nonnegative."""
    coeffs = tuple(_positive_rational(float(c), max_denominator) for c in part.outer)
    if part.structure.is_degenerate:
        return part.structure.with_coefficients(coeffs, 0)
    circuit = part.structure.with_coefficients(coeffs, rationalize(part.inner, max_denominator))
    for _ in range(halvings):
        if is_nonnegative(circuit):
            return circuit
        circuit = circuit.with_coefficients(coeffs, circuit.inner_coeff / 2)
    if is_nonnegative(circuit):
        return circuit
    logger.debug(f"Projection exhausted {halvings} halvings; zeroing c_b")
    return circuit.with_coefficients(coeffs, 0)


class _RestartSearch:
    """One deterministic restart of the coordinate search."""

    def __init__(self, report: SeparationReport, cfg: AttackConfig, restart: int, pool):
        self.report = report
        self.cfg = cfg
        self.restart = restart
        self.functional = report.functional
        self.f = report.witness.polynomial
        self.rng = np.random.default_rng([cfg.seed, restart])
        structures = random.Random(f"{cfg.seed}:{restart}")

        points = float_grid(report.region, cfg.resolution, self.functional.points)
        circuits = [
            sample_circuit(structures, report.n, pool, nonnegative=True, max_retries=settings.SAMPLING_RETRIES)
            for _ in range(cfg.parts)
        ]
        exponents = {alpha for c in circuits for alpha in (*c.outer, c.inner)} | set(self.f.terms)
        columns = monomial_columns(points, exponents)
        self.columns = columns
        self.f_values = sum(float(c) * columns[alpha] for alpha, c in self.f.terms.items())
        self.parts: List[_Part] = []
        for c in circuits:
            self.parts.append(
                _Part(
                    structure=c,
                    outer=np.array([float(v) for v in c.outer_coeffs]) * INITIAL_SCALE,
                    inner=float(c.inner_coeff) * INITIAL_SCALE,
                    outer_columns=np.stack([columns[alpha] for alpha in c.outer]),
                    inner_column=None if c.is_degenerate else columns[c.inner],
                )
            )
        # (part, slot); slot -1 addresses c_b
        self.coordinates = [
            (i, slot)
            for i, part in enumerate(self.parts)
            for slot in range(-1 if not part.structure.is_degenerate else 0, len(part.structure.outer))
        ]
        self.g_values = sum(part.values() for part in self.parts)
        self.objective = float(np.max(np.abs(self.g_values - self.f_values)))

    def _propose(self, iteration: int) -> Tuple[int, np.ndarray, float, np.ndarray]:
        index, slot = self.coordinates[int(self.rng.integers(len(self.coordinates)))]
        part = self.parts[index]
        move = self.rng.standard_normal() * self.cfg.step_size(iteration)
        weights = np.array([float(w) for w in part.structure.weights])
        outer = part.outer.copy()
        if slot >= 0:
            outer[slot] *= math.exp(move)
            theta = _theta(outer, weights)
            inner = _project(part.inner, theta, part.even_inner)
        else:
            theta = _theta(outer, weights)
            inner = _project(part.inner + move * max(theta, abs(part.inner), 1e-12), theta, part.even_inner)
        delta = (outer - part.outer) @ part.outer_columns
        if part.inner_column is not None:
            delta = delta + (inner - part.inner) * part.inner_column
        return index, outer, inner, delta

    def grid_norm(self, g: SparsePolynomial) -> float:
        """max |g - f| over the search grid, for g supported on the sampled circuits."""
        g_values = sum(float(c) * self.columns[alpha] for alpha, c in g.terms.items())
        return float(np.max(np.abs(g_values - self.f_values)))

    def certify(self) -> Tuple[SoncCertificate, Fraction, float]:
        max_denominator = settings.RATIONALIZE_DENOMINATOR
        circuits = [_rationalized_circuit(p, max_denominator, settings.PROJECTION_HALVINGS) for p in self.parts]
        parts = tuple(c.to_polynomial() for c in circuits)
        cert = SoncCertificate(n=self.report.n, target=poly_sum(parts, self.report.n), parts=parts)
        report = verify(cert, max_workers=1)
        if not report.ok:
            raise SoundnessAlarm(f"Rationalized candidate failed verification: {report.failure_reason}")
        return cert, four_point_gap(self.functional, self.f, cert.target), self.grid_norm(cert.target)

    def run(self) -> RestartOutcome:
        lower_bound = self.report.lower_bound
        best_gap: Optional[Fraction] = None
        best_cert: Optional[SoncCertificate] = None
        best_norm = math.inf
        trace: List[TraceRow] = []
        alarms = certified = 0
        dirty = True
        for iteration in range(self.cfg.budget):
            index, outer, inner, delta = self._propose(iteration)
            candidate = float(np.max(np.abs(self.g_values + delta - self.f_values)))
            if candidate < self.objective:
                part = self.parts[index]
                part.outer, part.inner = outer, inner
                self.g_values = self.g_values + delta
                self.objective = candidate
                dirty = True
            checkpoint = (iteration + 1) % self.cfg.verify_interval == 0 or iteration + 1 == self.cfg.budget
            if not (checkpoint and dirty):
                continue
            dirty = False
            cert, gap, norm = self.certify()
            certified += 1
            margin = gap - lower_bound
            if margin < 0:
                alarms += 1
                logger.error(f"Soundness alarm: restart {self.restart} iteration {iteration} gap {gap} < bound {lower_bound}")
            if best_gap is None or gap < best_gap:
                best_gap, best_cert, best_norm = gap, cert, norm
                trace.append(
                    TraceRow(iteration=iteration, grid_norm_float=norm, four_point_gap=gap, margin=margin)
                )
                logger.debug(f"Restart {self.restart} iteration {iteration}: gap {gap}, grid norm {norm:.6g}")
        return RestartOutcome(
            restart=self.restart,
            best_gap=best_gap,
            best_grid_norm=best_norm,
            certificate=best_cert,
            trace=tuple(trace),
            alarms=alarms,
            certified=certified,
        )


# PUBLIC_INTERFACE
def attack(report: SeparationReport, cfg: Optional[AttackConfig] = None, max_workers: Optional[int] = None) -> AttackResult:
    """
    Search for a verified SONC candidate beating the certified bound.

    Restarts are independent and run in a thread pool; each is deterministic
    given (seed, restart index), so the merged result only depends on cfg.

    Args:
        report: Output of separation_bound
        cfg: Search parameters; defaults come from settings
        max_workers: Thread cap, defaults to settings.thread_count()

    Returns:
        AttackResult for the restart with the smallest exact gap

    Raises:
        ValueError: When the support pool is invalid for the report's dimension
    """
    cfg = cfg or AttackConfig()
    n, d = report.n, report.d
    if cfg.pool is not None:
        pool = validated_pool(n, cfg.pool, None)
    else:
        pool = even_lattice_pool(n, 2 * d, per_coordinate=True)
    workers = min(cfg.restarts, max_workers or settings.thread_count())
    logger.info(
        f"Attack: {cfg.restarts} restarts x {cfg.budget} iterations, {cfg.parts} parts, "
        f"pool of {len(pool)} points, {workers} workers"
    )

    def run(restart: int) -> RestartOutcome:
        return _RestartSearch(report, cfg, restart, pool).run()

    if workers == 1:
        outcomes = [run(r) for r in range(cfg.restarts)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            outcomes = list(executor.map(run, range(cfg.restarts)))

    best = min(outcomes, key=lambda o: (o.best_gap, o.restart))
    result = AttackResult(
        best_gap=best.best_gap,
        best_grid_norm=best.best_grid_norm,
        lower_bound=report.lower_bound,
        margin=best.best_gap - report.lower_bound,
        best_restart=best.restart,
        certificate=best.certificate,
        trace=best.trace,
        alarms=sum(o.alarms for o in outcomes),
        iterations=cfg.budget * cfg.restarts,
        certified=sum(o.certified for o in outcomes),
    )
    if result.alarm:
        logger.error(f"Attack finished with {result.alarms} soundness alarms")
    else:
        logger.info(f"Attack finished: best gap {result.best_gap}, margin {result.margin}")
    return result
