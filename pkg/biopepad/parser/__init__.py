"""
Parser und Serialisierer für Bio-PEPAd-Modelldateien.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-14
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-14"

# Exports für einfachere Importierung
from .diagnostics import ModelSource, ParseDiagnostic, ParseResult, Severity
from .grammar import parse_model, parse_model_strict, read_model
from .serializer import serialize_model

__all__ = [
    "ModelSource",
    "ParseDiagnostic",
    "ParseResult",
    "Severity",
    "parse_model",
    "parse_model_strict",
    "read_model",
    "serialize_model",
]
