"""Shared fixtures for the test suites."""
from fractions import Fraction

import pytest

from polycore.parser import parse

MOTZKIN_TEXT = "x1^4*x2^2 + x1^2*x2^4 - 3*x1^2*x2^2 + 1"


@pytest.fixture
def motzkin():
    """The Motzkin polynomial in two variables."""
    return parse(MOTZKIN_TEXT, 2)


@pytest.fixture
def u_six_fifths():
    return Fraction(6, 5)
