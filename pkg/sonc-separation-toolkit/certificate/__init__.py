"""SONC certificates: verification and random generation."""
from .models import CertificateSchema, PartResult, SoncCertificate, VerificationReport, VerificationReportSchema
from .verify import verify
from .generator import even_lattice_pool, random_sonc, sample_circuit, validated_pool

__all__ = [
    'CertificateSchema', 'PartResult', 'SoncCertificate', 'VerificationReport',
    'VerificationReportSchema', 'verify', 'even_lattice_pool', 'random_sonc', 'sample_circuit', 'validated_pool',
]
