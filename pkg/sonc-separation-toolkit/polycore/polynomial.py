"""Exact sparse multivariate polynomials over the rationals.

A polynomial is a map from exponent vectors to nonzero ``Fraction``
coefficients. The zero polynomial is the empty map.

  x1^2*x2 + 3   (n = 2)  ->  {(2, 1): 1, (0, 0): 3}
"""

from fractions import Fraction
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from errors import DimensionMismatchError, InvalidScalingError
from polycore.rationals import to_rational

ExponentVector = Tuple[int, ...]
Scalar = Union[int, Fraction]


def grlex_key(alpha: ExponentVector) -> Tuple[int, ExponentVector]:
    """Sort key for graded-lexicographic order."""
    return (sum(alpha), alpha)


def is_even(alpha: ExponentVector) -> bool:
    return all(a % 2 == 0 for a in alpha)


def _check_exponent(alpha: Sequence[int], n: int) -> ExponentVector:
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != n:
        raise DimensionMismatchError(f"Exponent vector {alpha} has length {len(alpha)}, expected {n}")
    if any(a < 0 for a in alpha):
        raise ValueError(f"Exponent vector {alpha} has a negative entry")
    return alpha


# PUBLIC_INTERFACE
class SparsePolynomial:
    """
    Immutable exact polynomial in n variables x1..xn.

    Attributes:
        n: number of variables
        terms: read-only map from exponent vector to nonzero coefficient
    """

    __slots__ = ("_n", "_terms", "_hash")

    def __init__(self, n: int, terms: Optional[Mapping[Sequence[int], Scalar]] = None):
        if n < 1:
            raise ValueError(f"Dimension must be at least 1, got {n}")
        merged: Dict[ExponentVector, Fraction] = {}
        for alpha, coeff in (terms or {}).items():
            key = _check_exponent(alpha, n)
            merged[key] = merged.get(key, Fraction(0)) + to_rational(coeff)
        self._n = n
        self._terms = {alpha: c for alpha, c in merged.items() if c != 0}
        self._hash: Optional[int] = None

    @classmethod
    def _from_clean(cls, n: int, terms: Dict[ExponentVector, Fraction]) -> "SparsePolynomial":
        # Trusted constructor: keys already validated, zeros still to be pruned.
        poly = cls.__new__(cls)
        poly._n = n
        poly._terms = {alpha: c for alpha, c in terms.items() if c != 0}
        poly._hash = None
        return poly

    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> Mapping[ExponentVector, Fraction]:
        return MappingProxyType(self._terms)

    def support(self) -> FrozenSet[ExponentVector]:
        return frozenset(self._terms)

    def coefficient(self, alpha: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(alpha), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1."""
        return max((sum(alpha) for alpha in self._terms), default=-1)

    def sorted_terms(self) -> List[Tuple[ExponentVector, Fraction]]:
        """Terms in descending graded-lexicographic order (printing order)."""
        return sorted(self._terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def _check_same_dimension(self, other: "SparsePolynomial") -> None:
        if self._n != other._n:
            raise DimensionMismatchError(f"Dimension mismatch: {self._n} vs {other._n}")

    def __add__(self, other: Union["SparsePolynomial", Scalar]) -> "SparsePolynomial":
        if not isinstance(other, SparsePolynomial):
            other = constant(self._n, other)
        self._check_same_dimension(other)
        out = dict(self._terms)
        for alpha, c in other._terms.items():
            out[alpha] = out.get(alpha, Fraction(0)) + c
        return SparsePolynomial._from_clean(self._n, out)

    __radd__ = __add__

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial._from_clean(self._n, {alpha: -c for alpha, c in self._terms.items()})

    def __sub__(self, other: Union["SparsePolynomial", Scalar]) -> "SparsePolynomial":
        if not isinstance(other, SparsePolynomial):
            other = constant(self._n, other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "SparsePolynomial":
        return constant(self._n, other) - self

    def __mul__(self, other: Union["SparsePolynomial", Scalar]) -> "SparsePolynomial":
        if not isinstance(other, SparsePolynomial):
            factor = to_rational(other)
            return SparsePolynomial._from_clean(self._n, {alpha: c * factor for alpha, c in self._terms.items()})
        self._check_same_dimension(other)
        out: Dict[ExponentVector, Fraction] = {}
        for alpha, a in self._terms.items():
            for beta, b in other._terms.items():
                gamma = tuple(x + y for x, y in zip(alpha, beta))
                out[gamma] = out.get(gamma, Fraction(0)) + a * b
        return SparsePolynomial._from_clean(self._n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SparsePolynomial":
        if k < 0:
            raise ValueError(f"Polynomial power must be nonnegative, got {k}")
        result = constant(self._n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """Exact value at a rational point."""
        if len(point) != self._n:
            raise DimensionMismatchError(f"Point has length {len(point)}, expected {self._n}")
        values = [to_rational(v) for v in point]
        # Powers are shared between terms.
        powers: Dict[Tuple[int, int], Fraction] = {}
        total = Fraction(0)
        for alpha, c in self._terms.items():
            term = c
            for i, e in enumerate(alpha):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = values[i] ** e
                    term *= powers[key]
            total += term
        return total

    def rescale(self, a: Sequence[Scalar]) -> "SparsePolynomial":
        """Return h with h(x) = f(a1*x1, ..., an*xn)."""
        if len(a) != self._n:
            raise DimensionMismatchError(f"Scaling vector has length {len(a)}, expected {self._n}")
        factors = [to_rational(v) for v in a]
        if any(v == 0 for v in factors):
            raise InvalidScalingError(f"Scaling vector {[str(v) for v in factors]} has a zero entry")
        out = {}
        for alpha, c in self._terms.items():
            scale = Fraction(1)
            for v, e in zip(factors, alpha):
                scale *= v ** e
            out[alpha] = c * scale
        return SparsePolynomial._from_clean(self._n, out)

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"SparsePolynomial(n={self._n}, {format_polynomial(self)!r})"


def zero(n: int) -> SparsePolynomial:
    return SparsePolynomial(n)


def constant(n: int, value: Scalar) -> SparsePolynomial:
    return SparsePolynomial(n, {(0,) * n: value})


def monomial(n: int, alpha: Sequence[int], coeff: Scalar = 1) -> SparsePolynomial:
    return SparsePolynomial(n, {tuple(alpha): coeff})


def variable(n: int, index: int) -> SparsePolynomial:
    """The polynomial x_index, with 1-based index as in the text format."""
    if not 1 <= index <= n:
        raise ValueError(f"Variable index {index} out of range 1..{n}")
    alpha = [0] * n
    alpha[index - 1] = 1
    return monomial(n, alpha)


# PUBLIC_INTERFACE
def add(f: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    return f + g


# PUBLIC_INTERFACE
def sub(f: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    return f - g


def neg(f: SparsePolynomial) -> SparsePolynomial:
    return -f


# PUBLIC_INTERFACE
def mul(f: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    return f * g


# PUBLIC_INTERFACE
def scale(f: SparsePolynomial, k: Scalar) -> SparsePolynomial:
    return f * to_rational(k)


# PUBLIC_INTERFACE
def power(f: SparsePolynomial, k: int) -> SparsePolynomial:
    return f ** k


# PUBLIC_INTERFACE
def poly_sum(polys: Iterable[SparsePolynomial], n: int) -> SparsePolynomial:
    """Sum of an iterable of polynomials, all in n variables."""
    total: Dict[ExponentVector, Fraction] = {}
    for p in polys:
        if p.n != n:
            raise DimensionMismatchError(f"Dimension mismatch: {p.n} vs {n}")
        for alpha, c in p.terms.items():
            total[alpha] = total.get(alpha, Fraction(0)) + c
    return SparsePolynomial._from_clean(n, total)


# PUBLIC_INTERFACE
def evaluate_exact(f: SparsePolynomial, point: Sequence[Scalar]) -> Fraction:
    """
    Evaluate a polynomial exactly.

    Args:
        f: Polynomial to evaluate
        point: One rational value per variable

    Returns:
        The exact value of f at point

    Raises:
        DimensionMismatchError: When len(point) != f.n
    """
    return f.evaluate(point)


# PUBLIC_INTERFACE
def rescale(f: SparsePolynomial, a: Sequence[Scalar]) -> SparsePolynomial:
    """
    Apply the variable-rescaling isomorphism f(x) -> f(a1*x1, ..., an*xn).

    The support is unchanged and the coefficient at alpha is multiplied by
    a^alpha, so nonnegativity and the circuit structure are preserved.

    Args:
        f: Polynomial to rescale
        a: Nonzero rational factors, one per variable

    Returns:
        The rescaled polynomial

    Raises:
        InvalidScalingError: When some a_i is zero
    """
    return f.rescale(a)


def _format_monomial(alpha: ExponentVector) -> str:
    factors = []
    for i, e in enumerate(alpha, start=1):
        if e == 1:
            factors.append(f"x{i}")
        elif e > 1:
            factors.append(f"x{i}^{e}")
    return "*".join(factors)


# PUBLIC_INTERFACE
def format_polynomial(f: SparsePolynomial) -> str:
    """Canonical text form: descending graded-lex terms, lowest-term coefficients."""
    if f.is_zero():
        return "0"
    pieces = []
    for k, (alpha, c) in enumerate(f.sorted_terms()):
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        mono = _format_monomial(alpha)
        if not mono:
            body = str(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{magnitude}*{mono}"
        if k == 0:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)

