"""Empirical attack on the separation bound."""
from .grid import grid_sup_norm
from .models import AttackConfig, AttackResult, AttackResultSchema, TraceRow
from .attack import attack

__all__ = ['grid_sup_norm', 'AttackConfig', 'AttackResult', 'AttackResultSchema', 'TraceRow', 'attack']
