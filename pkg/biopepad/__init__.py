"""
Bio-PEPAd Toolkit: Prozessalgebra mit Verzögerungen für biochemische Netzwerke.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-18

Das Paket parst Modelle, exploriert das stochastische Transitionssystem der
Starting-Terminating-Semantik, simuliert Trajektorien mit dem DSSA und
leitet das äquivalente System verzögerter Differentialgleichungen ab.
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-18"

# Exports für einfachere Importierung
from .core import SystemSpec, eval_rate, stoichiometry_matrix, validate
from .dde import derive_dde, solve_dde
from .dssa import ensemble, simulate
from .parser import parse_model, parse_model_strict, serialize_model
from .semantics import explore_slts

__all__ = [
    "SystemSpec",
    "eval_rate",
    "stoichiometry_matrix",
    "validate",
    "derive_dde",
    "solve_dde",
    "ensemble",
    "simulate",
    "parse_model",
    "parse_model_strict",
    "serialize_model",
    "explore_slts",
]
