"""Test cases for SONC certificate verification and generation.

Test Cases:
    CERT-001: verify accepts valid certificates and pinpoints failures
    CERT-002: verify is invariant under permuting parts
    CERT-003: random_sonc is deterministic and always verifies
    CERT-004: Support pools are validated
    CERT-005: Certificate JSON round-trips through the schema
"""
import random

import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from certificate.generator import even_lattice_pool, random_sonc, sample_circuit, validated_pool
from certificate.models import CertificateSchema, SoncCertificate, VerificationReportSchema
from certificate.verify import NOT_NONNEGATIVE, RESIDUAL, verify
from circuit.detection import detect_circuit
from circuit.nonnegativity import is_nonnegative
from errors import DimensionMismatchError, SamplingError
from polycore.parser import parse
from polycore.polynomial import zero


def certificate(target: str, parts, n: int) -> SoncCertificate:
    return SoncCertificate(n=n, target=parse(target, n), parts=tuple(parse(p, n) for p in parts))


# CERT-001
def test_verify_motzkin_plus_square(motzkin):
    """Test verifying the Motzkin polynomial plus a square."""
    cert = SoncCertificate(n=2, target=motzkin + parse("2*x1^2", 2), parts=(motzkin, parse("2*x1^2", 2)))
    report = verify(cert)
    assert report.ok
    assert report.first_failure is None
    assert report.residual.is_zero()
    assert [p.ok for p in report.parts] == [True, True]


def test_verify_negative_circuit():
    """Test that a negative circuit part fails with its circuit number."""
    report = verify(certificate("x1^4 - 3*x1^2 + 1", ["x1^4 - 3*x1^2 + 1"], 1))
    assert not report.ok
    assert report.first_failure == 0
    assert report.failure_reason == NOT_NONNEGATIVE
    assert report.parts[0].theta_q == "4/1"
    assert report.parts[0].q == 2


def test_verify_part_that_is_not_a_circuit():
    """Test that a part that is not a circuit is reported with its reason."""
    cert = SoncCertificate(n=1, target=zero(1), parts=(parse("x1^2", 1), parse("-x1^2", 1)))
    report = verify(cert)
    assert not report.ok
    assert report.first_failure == 1
    assert report.failure_reason == "negative_outer_coefficient"
    assert report.parts[1].circuit is None


def test_verify_reports_residual():
    """Test that a nonzero residual fails verification."""
    report = verify(certificate("x1^2 + 2", ["x1^2", "1"], 1))
    assert not report.ok
    assert report.first_failure is None
    assert report.failure_reason == RESIDUAL
    assert report.residual == parse("1", 1)


def test_verify_sequential_and_threaded_agree(motzkin):
    """Test that the worker count does not change the report."""
    cert = SoncCertificate(n=2, target=motzkin + motzkin, parts=(motzkin, motzkin))
    assert verify(cert, max_workers=1) == verify(cert, max_workers=4)


def test_certificate_dimension_mismatch(motzkin):
    """Test certificate construction with mismatched or missing parts."""
    with pytest.raises(DimensionMismatchError):
        SoncCertificate(n=1, target=parse("x1^2", 1), parts=(motzkin,))
    with pytest.raises(ValueError):
        SoncCertificate(n=1, target=parse("x1^2", 1), parts=())


# CERT-002
@given(st.integers(min_value=0, max_value=10 ** 4), st.randoms(use_true_random=False))
@hypothesis_settings(max_examples=50, deadline=None)
def test_verify_permutation_invariant(seed, rnd):
    """Test that the first failure follows the bad part under shuffling."""
    cert = random_sonc(2, 6, part_count=4, seed=seed)
    bad = parse("x1^4*x2^2 + x1^2*x2^4 - 4*x1^2*x2^2 + 1", 2)
    parts = list(cert.parts) + [bad]
    rnd.shuffle(parts)
    shuffled = SoncCertificate(n=2, target=cert.target + bad, parts=tuple(parts))
    report = verify(shuffled)
    assert not report.ok
    assert report.first_failure == parts.index(bad)
    assert verify(SoncCertificate(n=2, target=cert.target, parts=tuple(reversed(cert.parts)))).ok


# CERT-003
def test_random_sonc_is_deterministic():
    """Test that random_sonc depends only on its seed."""
    assert random_sonc(2, 8, seed=7) == random_sonc(2, 8, seed=7)
    assert random_sonc(2, 8, seed=7) != random_sonc(2, 8, seed=8)


@pytest.mark.parametrize("seed", range(1000))
def test_random_sonc_always_verifies(seed):
    """Test that generated certificates always verify."""
    n = 1 + seed % 3
    cert = random_sonc(n, 6 + 2 * (seed % 2), part_count=1 + seed % 4, seed=seed)
    report = verify(cert, max_workers=1)
    assert report.ok, report


@pytest.mark.parametrize("seed", range(20))
def test_random_sonc_tiny_pool(seed):
    """Test generation from a two-point pool."""
    cert = random_sonc(1, 2, pool=[(0,), (2,)], part_count=1, seed=seed)
    assert verify(cert).ok
    c = detect_circuit(cert.parts[0])
    assert c.is_degenerate or c.inner == (1,)


def test_sample_circuit_nonnegative_flag():
    """Test that sampled circuits are nonnegative by default."""
    pool = even_lattice_pool(2, 8)
    rng = random.Random(3)
    assert all(is_nonnegative(sample_circuit(rng, 2, pool)) for _ in range(100))


# CERT-004
def test_even_lattice_pool():
    """Test the even lattice pools."""
    assert even_lattice_pool(1, 4) == [(0,), (2,), (4,)]
    assert even_lattice_pool(2, 2) == [(0, 0), (0, 2), (2, 0)]
    assert len(even_lattice_pool(2, 2, per_coordinate=True)) == 4


def test_empty_pool_raises_sampling_error():
    """Test generation from an empty pool."""
    with pytest.raises(SamplingError):
        random_sonc(1, 4, pool=[], seed=0)


@pytest.mark.parametrize("pool", [[(1,)], [(0, 0)], [(6,)], [(-2,)]])
def test_invalid_pool_points(pool):
    """Test pool validation."""
    with pytest.raises(ValueError):
        validated_pool(1, pool, 4)


def test_part_count_must_be_positive():
    """Test generation with zero parts."""
    with pytest.raises(ValueError):
        random_sonc(1, 4, part_count=0)


# CERT-005
def test_certificate_schema_round_trip():
    """Test the certificate JSON round trip."""
    cert = random_sonc(2, 6, seed=11)
    schema = CertificateSchema.from_certificate(cert)
    assert CertificateSchema.parse_raw(schema.json()).to_certificate() == cert


def test_certificate_schema_rejects_empty_parts():
    """Test certificate JSON with empty parts."""
    with pytest.raises(ValueError):
        CertificateSchema.parse_raw('{"n": 1, "target": "x1^2", "parts": []}')
    with pytest.raises(ValueError):
        CertificateSchema.parse_raw('{"n": 1, "target": "x1^2", "parts": ["  "]}')


def test_report_schema_mirrors_parts(motzkin):
    """Test the verification report schema."""
    cert = SoncCertificate(n=2, target=motzkin, parts=(motzkin,))
    schema = VerificationReportSchema.from_report(verify(cert))
    assert schema.ok
    assert schema.residual == "0"
    assert schema.parts[0].circuit.weights == ["1/3", "1/3", "1/3"]
    assert schema.parts[0].theta_q == "27/1"
