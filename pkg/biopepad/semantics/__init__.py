"""
Operationale Semantik: Listenfunktionen, Relationen und SLTS-Exploration.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-14
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-14"

# Exports für einfachere Importierung
from .export import SLTS_FORMATS, render_slts, to_dot, to_json, write_slts
from .lists import mu, phi, pi_products, rho_levels, zeta
from .relations import (
    Derivation,
    TransitionLabel,
    TransitionPhase,
    completion_transitions,
    start_transitions,
    stochastic_transitions,
)
from .slts import SLTS, ExplorationLimits, canonical_key, explore_slts, pending_count, state_label

__all__ = [
    "SLTS_FORMATS",
    "render_slts",
    "to_dot",
    "to_json",
    "write_slts",
    "mu",
    "phi",
    "pi_products",
    "rho_levels",
    "zeta",
    "Derivation",
    "TransitionLabel",
    "TransitionPhase",
    "completion_transitions",
    "start_transitions",
    "stochastic_transitions",
    "SLTS",
    "ExplorationLimits",
    "canonical_key",
    "explore_slts",
    "pending_count",
    "state_label",
]
