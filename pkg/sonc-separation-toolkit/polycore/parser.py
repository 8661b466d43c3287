"""Parser for the polynomial text format.

Grammar (whitespace is ignored)::

    polynomial  := [sign] term (sign term)*
    term        := coefficient [['*'] monomial] | monomial
    coefficient := INT ['/' INT]
    monomial    := factor ('*' factor)*
    factor      := 'x' INDEX ['^' EXPONENT]

Variables are x1..xn with n given by the caller, never inferred.
"""

import re
from fractions import Fraction
from typing import Dict, List, NamedTuple

from errors import PolynomialSyntaxError
from polycore.polynomial import ExponentVector, SparsePolynomial

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x)|(?P<op>[-+*/^])|(?P<bad>\S))")


class _Token(NamedTuple):
    kind: str
    text: str
    position: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            # only trailing whitespace is left
            break
        kind = match.lastgroup
        start = match.start(kind)
        if kind == "bad":
            raise PolynomialSyntaxError(f"Unexpected character {match.group(kind)!r}", start)
        tokens.append(_Token(kind, match.group(kind), start))
        pos = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, n: int):
        self.n = n
        self.tokens = _tokenize(text)
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def _advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _accept_op(self, op: str) -> bool:
        if self.current.kind == "op" and self.current.text == op:
            self.index += 1
            return True
        return False

    def _expect_int(self, what: str) -> int:
        token = self.current
        if token.kind == "op" and token.text == "-" and what == "exponent":
            raise PolynomialSyntaxError("Negative exponent", token.position)
        if token.kind != "int":
            raise PolynomialSyntaxError(f"Expected {what}", token.position)
        self.index += 1
        return int(token.text)

    def parse(self) -> SparsePolynomial:
        terms: Dict[ExponentVector, Fraction] = {}
        sign = 1
        if self._accept_op("-"):
            sign = -1
        else:
            self._accept_op("+")
        while True:
            alpha, coeff = self._term()
            terms[alpha] = terms.get(alpha, Fraction(0)) + sign * coeff
            if self.current.kind == "end":
                break
            if self._accept_op("+"):
                sign = 1
            elif self._accept_op("-"):
                sign = -1
            else:
                raise PolynomialSyntaxError(f"Expected '+' or '-', found {self.current.text!r}", self.current.position)
        return SparsePolynomial(self.n, terms)

    def _term(self):
        coeff = Fraction(1)
        exponents = [0] * self.n
        if self.current.kind == "int":
            numerator = int(self._advance().text)
            if self._accept_op("/"):
                position = self.current.position
                denominator = self._expect_int("denominator")
                if denominator == 0:
                    raise PolynomialSyntaxError("Zero denominator", position)
                coeff = Fraction(numerator, denominator)
            else:
                coeff = Fraction(numerator)
            if not self._accept_op("*") and self.current.kind != "var":
                return tuple(exponents), coeff
        elif self.current.kind != "var":
            raise PolynomialSyntaxError("Expected a coefficient or a variable", self.current.position)
        self._factor(exponents)
        while self._accept_op("*"):
            self._factor(exponents)
        return tuple(exponents), coeff

    def _factor(self, exponents: List[int]) -> None:
        token = self.current
        if token.kind != "var":
            raise PolynomialSyntaxError("Expected a variable", token.position)
        self.index += 1
        index_token = self.current
        if index_token.kind != "int":
            raise PolynomialSyntaxError("Expected a variable index after 'x'", index_token.position)
        self.index += 1
        index = int(index_token.text)
        if not 1 <= index <= self.n:
            raise PolynomialSyntaxError(f"Variable x{index} out of range x1..x{self.n}", token.position)
        exponent = 1
        if self._accept_op("^"):
            position = self.current.position
            exponent = self._expect_int("exponent")
            if exponent < 1:
                raise PolynomialSyntaxError("Exponent must be at least 1", position)
        exponents[index - 1] += exponent


# PUBLIC_INTERFACE
def parse(text: str, n: int) -> SparsePolynomial:
    """
    Parse polynomial text in n variables.

    Like terms are merged and cancelling terms dropped, so "x1 - x1" is the
    zero polynomial. The literal "0" is also the zero polynomial.

    Args:
        text: Polynomial text, e.g. "x1^4*x2^2 + x1^2*x2^4 - 3*x1^2*x2^2 + 1"
        n: Number of variables

    Returns:
        The parsed polynomial

    Raises:
        PolynomialSyntaxError: On malformed text, an out-of-range variable or a negative exponent
    """
    if n < 1:
        raise ValueError(f"Dimension must be at least 1, got {n}")
    return _Parser(text, n).parse()

