"""
Kommandozeile des Bio-PEPAd Toolkits.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-18
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-18"

# Exports für einfachere Importierung
from .commands import Command, CommandRegistry, get_registry, register_command
from .main import ToolSettings, main
from .manifest import RunManifest, file_digest

__all__ = [
    "Command",
    "CommandRegistry",
    "get_registry",
    "register_command",
    "ToolSettings",
    "main",
    "RunManifest",
    "file_digest",
]
