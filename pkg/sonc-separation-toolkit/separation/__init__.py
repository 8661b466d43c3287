"""The separating functional, the square witness and the certified bound."""
from .functional import SeparatingFunctional, apply_L, four_point_gap, monomial_L_positive
from .phi import convexity_violation, phi, phi_identity_check
from .witness import SquareWitness, build_witness
from .claim import ClaimBound, claim_audit, claim_lower_bound
from .models import SeparationReport, SeparationReportSchema
from .bound import anchor_region, choose_u, separation_bound

__all__ = [
    'SeparatingFunctional', 'apply_L', 'four_point_gap', 'monomial_L_positive',
    'convexity_violation', 'phi', 'phi_identity_check',
    'SquareWitness', 'build_witness',
    'ClaimBound', 'claim_audit', 'claim_lower_bound',
    'SeparationReport', 'SeparationReportSchema',
    'anchor_region', 'choose_u', 'separation_bound',
]
