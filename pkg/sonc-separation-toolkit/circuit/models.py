"""Circuit polynomial data model and its JSON schema."""
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import List, Tuple

from pydantic import BaseModel, Field, validator

from circuit.linalg import rank
from polycore.polynomial import ExponentVector, SparsePolynomial, is_even
from polycore.rationals import format_rational, to_rational


class CircuitInvariantError(ValueError):
    """A CircuitData instance violates one of its structural invariants."""


# PUBLIC_INTERFACE
@dataclass(frozen=True)
class CircuitData:
    """
    A validated circuit polynomial sum(c_a * x^a for a in A) + c_b * x^b.

    Attributes:
        n: number of variables
        outer: the affinely independent even exponent vectors A
        outer_coeffs: positive coefficients c_a, aligned with outer
        inner: the exponent vector b in the relative interior of conv(A)
        inner_coeff: c_b, zero when b is not in the support
        weights: barycentric weights of b, aligned with outer
    """

    n: int
    outer: Tuple[ExponentVector, ...]
    outer_coeffs: Tuple[Fraction, ...]
    inner: ExponentVector
    inner_coeff: Fraction
    weights: Tuple[Fraction, ...]

    def __post_init__(self):
        if not (len(self.outer) == len(self.outer_coeffs) == len(self.weights) >= 1):
            raise CircuitInvariantError("outer, outer_coeffs and weights must be non-empty and aligned")
        if any(len(alpha) != self.n for alpha in (*self.outer, self.inner)):
            raise CircuitInvariantError(f"All exponent vectors must have length {self.n}")
        if not all(is_even(alpha) for alpha in self.outer):
            raise CircuitInvariantError("Outer exponent vectors must be even")
        lifted = [list(alpha) + [1] for alpha in self.outer]
        if rank(lifted) != len(self.outer):
            raise CircuitInvariantError("Outer exponent vectors must be affinely independent")
        if not all(c > 0 for c in self.outer_coeffs):
            raise CircuitInvariantError("Outer coefficients must be positive")
        if not all(w > 0 for w in self.weights) or sum(self.weights) != 1:
            raise CircuitInvariantError("Weights must be positive and sum to 1")
        combination = tuple(
            sum(w * alpha[i] for w, alpha in zip(self.weights, self.outer)) for i in range(self.n)
        )
        if combination != tuple(Fraction(b) for b in self.inner):
            raise CircuitInvariantError("Weighted sum of outer vectors does not equal the inner vector")
        if len(self.outer) == 1 and self.inner_coeff != 0:
            raise CircuitInvariantError("A degenerate circuit carries its coefficient on the outer term")
        if len(self.outer) > 1 and self.inner in self.outer:
            raise CircuitInvariantError("The inner vector cannot be a vertex")

    @property
    def is_degenerate(self) -> bool:
        return len(self.outer) == 1

    @property
    def weight_denominator(self) -> int:
        """Least common denominator q of the weights."""
        return lcm(*(w.denominator for w in self.weights))

    def to_polynomial(self) -> SparsePolynomial:
        terms = dict(zip(self.outer, self.outer_coeffs))
        if self.inner_coeff != 0:
            terms[self.inner] = self.inner_coeff
        return SparsePolynomial(self.n, terms)

    def with_coefficients(self, outer_coeffs, inner_coeff) -> "CircuitData":
        """Same support and weights, new coefficients."""
        return CircuitData(
            n=self.n,
            outer=self.outer,
            outer_coeffs=tuple(Fraction(c) for c in outer_coeffs),
            inner=self.inner,
            inner_coeff=Fraction(inner_coeff),
            weights=self.weights,
        )


# Request/Response Models
class CircuitDataSchema(BaseModel):
    """Wire format of CircuitData; rationals are "p/q" strings."""
    n: int = Field(..., ge=1)
    outer: List[List[int]] = Field(..., min_items=1)
    outer_coeffs: List[str] = Field(..., min_items=1)
    inner: List[int]
    inner_coeff: str
    weights: List[str] = Field(..., min_items=1)

    @validator("outer_coeffs", "weights", each_item=True)
    def validate_rational(cls, v):
        to_rational(v)
        return v

    @validator("inner_coeff")
    def validate_inner_coeff(cls, v):
        to_rational(v)
        return v

    @classmethod
    def from_circuit(cls, circuit: CircuitData) -> "CircuitDataSchema":
        return cls(
            n=circuit.n,
            outer=[list(alpha) for alpha in circuit.outer],
            outer_coeffs=[format_rational(c) for c in circuit.outer_coeffs],
            inner=list(circuit.inner),
            inner_coeff=format_rational(circuit.inner_coeff),
            weights=[format_rational(w) for w in circuit.weights],
        )

    def to_circuit(self) -> CircuitData:
        return CircuitData(
            n=self.n,
            outer=tuple(tuple(alpha) for alpha in self.outer),
            outer_coeffs=tuple(to_rational(c) for c in self.outer_coeffs),
            inner=tuple(self.inner),
            inner_coeff=to_rational(self.inner_coeff),
            weights=tuple(to_rational(w) for w in self.weights),
        )
