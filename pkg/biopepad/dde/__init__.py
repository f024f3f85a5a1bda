"""
Ableitung und Integration des DDE-Systems eines Bio-PEPAd-Modells.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-17
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-17"

# Exports für einfachere Importierung
from .derive import DDESystem, delayed_law, derive_dde
from .export import DDE_FORMATS, import_dde_json, render_dde, solution_csv, to_text
from .solver import MethodOfStepsSolver, SolutionGrid, compatible_step, solve_dde

__all__ = [
    "DDESystem",
    "delayed_law",
    "derive_dde",
    "DDE_FORMATS",
    "import_dde_json",
    "render_dde",
    "solution_csv",
    "to_text",
    "MethodOfStepsSolver",
    "SolutionGrid",
    "compatible_step",
    "solve_dde",
]
