from .formatters import CommandResult, render
from .circuits import check_circuit
from .certificates import check_certificate, random_certificate
from .bounds import bound, phi_audit
from .attack import run_attack

__all__ = [
    'CommandResult', 'render', 'check_circuit', 'check_certificate',
    'random_certificate', 'bound', 'phi_audit', 'run_attack',
]
