"""
Utility-Funktionen für das Bio-PEPAd Toolkit.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-12
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-12"

# Exports für einfachere Importierung
from .logging import setup_logger, LogLevel, ContextLogger, get_context_logger

__all__ = [
    "setup_logger",
    "LogLevel",
    "ContextLogger",
    "get_context_logger",
]
