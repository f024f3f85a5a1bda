"""
Kern-Funktionalität des Bio-PEPAd Toolkits: Domänentypen, Validierung,
Stöchiometrie und Ratenauswertung.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-13
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-13"

# Exports für einfachere Importierung
from .expressions import BinOp, Delayed, Expr, Neg, Num, Var, format_expr
from .model import (
    Compartment,
    Coop,
    FunctionalRate,
    MassAction,
    PrefixTerm,
    ProcessConfiguration,
    RateContext,
    RateContextEntry,
    RateExpr,
    RoleOp,
    ScheduleEntry,
    SpeciesComponent,
    SpeciesLeaf,
    SpeciesQuantity,
    SpeciesState,
    SystemSpec,
)
from .rates import eval_rate
from .stoichiometry import StoichiometryMatrix, stoichiometry_matrix
from .validation import Violation, validate

__all__ = [
    "BinOp",
    "Delayed",
    "Expr",
    "Neg",
    "Num",
    "Var",
    "format_expr",
    "Compartment",
    "Coop",
    "FunctionalRate",
    "MassAction",
    "PrefixTerm",
    "ProcessConfiguration",
    "RateContext",
    "RateContextEntry",
    "RateExpr",
    "RoleOp",
    "ScheduleEntry",
    "SpeciesComponent",
    "SpeciesLeaf",
    "SpeciesQuantity",
    "SpeciesState",
    "SystemSpec",
    "eval_rate",
    "StoichiometryMatrix",
    "stoichiometry_matrix",
    "Violation",
    "validate",
]
