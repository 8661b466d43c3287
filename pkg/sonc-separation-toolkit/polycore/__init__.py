"""Exact polynomial core: rationals, sparse polynomials, parsing and boxes."""
from .rationals import Rational, format_rational, to_rational
from .polynomial import (
    ExponentVector,
    SparsePolynomial,
    add,
    constant,
    evaluate_exact,
    format_polynomial,
    monomial,
    mul,
    neg,
    poly_sum,
    power,
    rescale,
    scale,
    sub,
    variable,
    zero,
)
from .parser import parse
from .region import BoxRegion, rescale_region

__all__ = [
    'Rational', 'format_rational', 'to_rational',
    'ExponentVector', 'SparsePolynomial', 'add', 'constant', 'evaluate_exact',
    'format_polynomial', 'monomial', 'mul', 'neg', 'poly_sum', 'power', 'rescale',
    'scale', 'sub', 'variable', 'zero',
    'parse', 'BoxRegion', 'rescale_region',
]
