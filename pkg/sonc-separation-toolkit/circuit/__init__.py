"""Circuit polynomial recognition, circuit numbers and nonnegativity."""
from .models import CircuitData, CircuitDataSchema, CircuitInvariantError
from .detection import barycentric_weights, detect_circuit, is_affinely_independent
from .nonnegativity import circuit_number, circuit_number_power, find_negative_point, is_nonnegative

__all__ = [
    'CircuitData', 'CircuitDataSchema', 'CircuitInvariantError',
    'barycentric_weights', 'detect_circuit', 'is_affinely_independent',
    'circuit_number', 'circuit_number_power', 'find_negative_point', 'is_nonnegative',
]
