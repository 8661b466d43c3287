"""Test cases for circuit recognition and the exact nonnegativity criterion.

Test Cases:
    CIRC-001: Bareiss elimination ranks and solves exactly
    CIRC-002: detect_circuit partitions supports and reports rejection reasons
    CIRC-003: circuit_number_power and is_nonnegative on known circuits
    CIRC-004: find_negative_point locates negative values and never lies
    CIRC-005: Verdicts agree with a refined grid oracle on random circuits
    CIRC-006: Rescaling preserves supports, weights and verdicts
    CIRC-007: CircuitData invariants and the JSON schema
"""
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from certificate.generator import even_lattice_pool, sample_circuit
from circuit.detection import barycentric_weights, detect_circuit
from circuit.linalg import InconsistentSystemError, SingularSystemError, rank, solve_exact
from circuit.models import CircuitData, CircuitDataSchema, CircuitInvariantError
from circuit.nonnegativity import circuit_number, circuit_number_power, find_negative_point, is_nonnegative
from errors import CircuitRejection, NotACircuitError
from polycore.parser import parse
from polycore.polynomial import rescale, zero
from polycore.rationals import rationalize
from polycore.region import BoxRegion


# CIRC-001
def test_rank_of_dependent_rows():
    """Test rank of integer matrices."""
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0, 1], [0, 1, 1], [1, 1, 2]]) == 2
    assert rank([]) == 0


def test_solve_exact_barycentric_system():
    """Test solving a barycentric system exactly."""
    # columns (alpha, 1) for alpha in {0, 4}, target (1, 1)
    assert solve_exact([[0, 1], [4, 1]], [1, 1]) == [Fraction(3, 4), Fraction(1, 4)]


def test_solve_exact_failures():
    """Test singular and inconsistent systems."""
    with pytest.raises(SingularSystemError):
        solve_exact([[1, 1], [2, 2]], [1, 1])
    with pytest.raises(InconsistentSystemError):
        solve_exact([[2, 1]], [4, 1])


# CIRC-002
def test_detect_degenerate_single_term():
    """Test detection of a single term."""
    c = detect_circuit(parse("5*x1^2", 1))
    assert c.is_degenerate
    assert c.outer == ((2,),)
    assert c.outer_coeffs == (Fraction(5),)
    assert c.weights == (Fraction(1),)
    assert c.inner_coeff == 0


def test_detect_motzkin(motzkin):
    """Test detection of the Motzkin polynomial."""
    c = detect_circuit(motzkin)
    assert c.outer == ((4, 2), (2, 4), (0, 0))
    assert c.inner == (2, 2)
    assert c.inner_coeff == -3
    assert c.weights == (Fraction(1, 3),) * 3


def test_detect_positive_even_inner_point():
    """Test detection with a positive even inner term."""
    c = detect_circuit(parse("x1^4 + x1^2 + 1", 1))
    assert c.outer == ((4,), (0,))
    assert c.inner == (2,)
    assert c.inner_coeff == 1
    assert c.weights == (Fraction(1, 2), Fraction(1, 2))


def test_detect_zero_coefficient_inner_point():
    """Test detection of a circuit with a zero inner coefficient."""
    c = detect_circuit(parse("x1^4 + 1", 1))
    assert c.inner == (1,)
    assert c.inner_coeff == 0
    assert c.weights == (Fraction(1, 4), Fraction(3, 4))


@pytest.mark.parametrize(
    "text,n,reason",
    [
        ("x1^3", 1, CircuitRejection.NON_EVEN_OUTER_EXPONENT),
        ("-x1^2", 1, CircuitRejection.NEGATIVE_OUTER_COEFFICIENT),
        ("x1^4 - x1^2 - 1", 1, CircuitRejection.MULTIPLE_INNER_POINTS),
        ("x1 + x1^3 + x1^4", 1, CircuitRejection.MULTIPLE_INNER_POINTS),
        ("x1^2 + x1^4 + x1^6 + 1", 1, CircuitRejection.AFFINE_DEPENDENCE),
        ("x1^2 - x1^4", 1, CircuitRejection.BETA_OUTSIDE_RELATIVE_INTERIOR),
        ("x1^4 - 3*x1^2", 1, CircuitRejection.BETA_OUTSIDE_RELATIVE_INTERIOR),
    ],
)
def test_detect_rejections(text, n, reason):
    """Test rejection reasons."""
    with pytest.raises(NotACircuitError) as exc_info:
        detect_circuit(parse(text, n))
    assert exc_info.value.reason == reason
    assert str(exc_info.value).startswith(reason.value)


def test_detect_zero_polynomial():
    """Test detection of the zero polynomial."""
    with pytest.raises(NotACircuitError) as exc_info:
        detect_circuit(zero(2))
    assert exc_info.value.reason == CircuitRejection.ZERO_POLYNOMIAL


def test_barycentric_weights_reject_boundary_point():
    """Test barycentric weights for a point on the boundary."""
    with pytest.raises(NotACircuitError):
        barycentric_weights([(4, 0), (0, 4), (0, 0)], (2, 2))


def test_detection_reconstructs_polynomial(motzkin):
    """Test that detection reconstructs its input."""
    for f in (motzkin, parse("x1^4 + 1", 1), parse("2*x1^6 - x1^3 + 1/2", 1)):
        assert detect_circuit(f).to_polynomial() == f


@pytest.mark.parametrize("seed", range(50))
def test_detection_recovers_sampled_circuits(seed):
    """Test detection on sampled circuits."""
    n = 1 + seed % 2
    c = sample_circuit(random.Random(seed), n, even_lattice_pool(n, 8), nonnegative=False)
    detected = detect_circuit(c.to_polynomial())
    assert detected.to_polynomial() == c.to_polynomial()
    if c.inner_coeff != 0:
        assert detected.inner == c.inner
        assert set(zip(detected.outer, detected.weights)) == set(zip(c.outer, c.weights))


# CIRC-003
def test_circuit_number_power_examples(motzkin):
    """Test circuit numbers of known circuits."""
    assert circuit_number_power(detect_circuit(motzkin)) == (Fraction(27), 3)
    assert circuit_number_power(detect_circuit(parse("x1^4 - 3*x1^2 + 1", 1))) == (Fraction(4), 2)
    assert circuit_number_power(detect_circuit(parse("5*x1^2", 1))) == (Fraction(5), 1)
    assert circuit_number(detect_circuit(motzkin)) == pytest.approx(3.0)


@pytest.mark.parametrize(
    "text,n,expected",
    [
        ("5*x1^2", 1, True),
        ("x1^4 - 3*x1^2 + 1", 1, False),
        ("x1^4 - 2*x1^2 + 1", 1, True),
        ("x1^4 + 5*x1^2 + 1", 1, True),
        ("x1^4 - 5*x1^2 + 1", 1, False),
        ("x1^4 + 1", 1, True),
        ("x1^2 + x1 + 1", 1, True),
        ("x1^2 + 3*x1 + 1", 1, False),
        ("x1^2 - 2*x1 + 1", 1, True),
        ("x1^4*x2^2 + x1^2*x2^4 - 3*x1^2*x2^2 + 1", 2, True),
        ("x1^4*x2^2 + x1^2*x2^4 - 4*x1^2*x2^2 + 1", 2, False),
    ],
)
def test_is_nonnegative_examples(text, n, expected):
    """Test the nonnegativity verdict on known circuits."""
    assert is_nonnegative(detect_circuit(parse(text, n))) is expected


def test_circuit_number_with_huge_coefficients():
    """Test the float circuit number on coefficients beyond the float range."""
    # Test case CIRC-003: Theta = 2 * sqrt(10^400) still fits a float
    c = detect_circuit(parse("1" + "0" * 400 + "*x1^2 + 1", 1))
    assert circuit_number(c) == pytest.approx(2e200, rel=1e-9)
    assert is_nonnegative(c)
    assert circuit_number(detect_circuit(parse("1" + "0" * 700 + "*x1^2 + 1", 1))) == float("inf")


# CIRC-004
def test_find_negative_point_uses_analytic_minimizer():
    """Test the negative point of x1^4 - 3*x1^2 + 1."""
    found = find_negative_point(detect_circuit(parse("x1^4 - 3*x1^2 + 1", 1)))
    assert found is not None
    point, value = found
    assert point == (Fraction(1),)
    assert value == -1


def test_find_negative_point_odd_inner_point():
    """Test the negative point for an odd inner term."""
    c = detect_circuit(parse("x1^2 + 3*x1 + 1", 1))
    point, value = find_negative_point(c)
    assert point[0] < 0
    assert value < 0
    assert c.to_polynomial().evaluate(point) == value


def test_find_negative_point_none_for_nonnegative(motzkin):
    """Test that nonnegative circuits have no negative point."""
    assert find_negative_point(detect_circuit(motzkin), budget=256) is None
    assert find_negative_point(detect_circuit(parse("5*x1^2", 1)), budget=64) is None


# CIRC-005
def refined_minimum(g, n: int, half_width: float = 10.0, resolution: int = 11, rounds: int = 10) -> np.ndarray:
    """Float argmin of g, zooming a grid on [-half_width, half_width]^n in on its best point."""
    exponents = [np.asarray(alpha, dtype=float) for alpha in g.terms]
    coeffs = [float(c) for c in g.terms.values()]
    center = np.zeros(n)
    half = half_width
    for _ in range(rounds):
        axes = [np.linspace(c - half, c + half, resolution) for c in center]
        mesh = np.meshgrid(*axes, indexing="ij")
        points = np.stack([m.ravel() for m in mesh], axis=1)
        values = sum(c * np.prod(points ** alpha, axis=1) for alpha, c in zip(exponents, coeffs))
        center = points[int(np.argmin(values))]
        half *= 2 / (resolution - 1)
    return center


def test_verdicts_agree_with_refined_grid_oracle():
    """Test that nonnegative verdicts survive a grid refined to 1e-6 around the minimum."""
    # Test case CIRC-005: no exact evaluation near the minimizer is negative for a nonnegative verdict
    pools = {n: even_lattice_pool(n, 8) for n in (1, 2)}
    for seed in range(500):
        n = 1 + seed % 2
        c = sample_circuit(random.Random(seed), n, pools[n], nonnegative=False)
        g = c.to_polynomial()
        if is_nonnegative(c):
            assert find_negative_point(c, budget=256) is None
            center = refined_minimum(g, n)
            point = tuple(rationalize(float(x), 10 ** 9) for x in center)
            assert g.evaluate(point) >= 0, (seed, g, point)
            for p in BoxRegion.cube(-10, 10, n).grid(11):
                assert g.evaluate(p) >= 0
        elif abs(float(c.inner_coeff)) > 1.05 * circuit_number(c):
            found = find_negative_point(c)
            assert found is not None
            assert g.evaluate(found[0]) == found[1] < 0


def test_refined_oracle_catches_boundary_circuit():
    """Test that the refined oracle sees the negative minimum just past the boundary."""
    # Theta = 2 for x1^4 + 1 with inner x1^2; c_b slightly below -Theta
    g = parse("x1^4 - 2001/1000*x1^2 + 1", 1)
    assert not is_nonnegative(detect_circuit(g))
    center = refined_minimum(g, 1)
    assert g.evaluate((rationalize(float(center[0]), 10 ** 9),)) < 0


# CIRC-006
factors = st.fractions(min_value=-3, max_value=3, max_denominator=4).filter(lambda v: v != 0)


@given(st.integers(min_value=0, max_value=10 ** 6), st.tuples(factors, factors))
@hypothesis_settings(max_examples=200, deadline=None)
def test_rescaling_preserves_circuit_structure(seed, a):
    """Test circuit structure under rescaling."""
    n = 1 + seed % 2
    a = a[:n]
    c = sample_circuit(random.Random(seed), n, even_lattice_pool(n, 8), nonnegative=False)
    original = detect_circuit(c.to_polynomial())
    scaled = detect_circuit(rescale(c.to_polynomial(), a))
    assert scaled.outer == original.outer
    assert scaled.inner == original.inner
    assert scaled.weights == original.weights
    assert is_nonnegative(scaled) == is_nonnegative(original)


# CIRC-007
def test_circuit_invariants_enforced():
    """Test CircuitData invariants."""
    with pytest.raises(CircuitInvariantError):
        CircuitData(n=1, outer=((2,), (0,)), outer_coeffs=(Fraction(1), Fraction(1)), inner=(1,),
                    inner_coeff=Fraction(0), weights=(Fraction(1, 3), Fraction(2, 3)))
    with pytest.raises(CircuitInvariantError):
        CircuitData(n=1, outer=((3,), (0,)), outer_coeffs=(Fraction(1), Fraction(1)), inner=(1,),
                    inner_coeff=Fraction(0), weights=(Fraction(1, 3), Fraction(2, 3)))
    with pytest.raises(CircuitInvariantError):
        CircuitData(n=1, outer=((2,), (0,)), outer_coeffs=(Fraction(-1), Fraction(1)), inner=(1,),
                    inner_coeff=Fraction(0), weights=(Fraction(1, 2), Fraction(1, 2)))


def test_circuit_schema_round_trip(motzkin):
    """Test the circuit JSON round trip."""
    c = detect_circuit(motzkin)
    schema = CircuitDataSchema.from_circuit(c)
    assert schema.weights == ["1/3", "1/3", "1/3"]
    assert schema.inner_coeff == "-3/1"
    assert CircuitDataSchema.parse_raw(schema.json()).to_circuit() == c


def test_circuit_schema_rejects_bad_rational():
    """Test circuit JSON with a malformed rational."""
    with pytest.raises(ValueError):
        CircuitDataSchema(n=1, outer=[[2]], outer_coeffs=["x"], inner=[2], inner_coeff="0/1", weights=["1/1"])
