"""
Export des DDE-Systems (Text, JSON) und der Lösung (CSV).

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-17
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-17"

import csv
import io
import json
import logging
from typing import Any, Dict, Union

from ..const import FORMAT_JSON, FORMAT_TEXT
from ..core.expressions import expr_from_dict, expr_to_dict
from ..core.stoichiometry import StoichiometryMatrix
from .derive import DDESystem
from .solver import SolutionGrid

_LOGGER = logging.getLogger(__name__)

DDE_FORMATS = [FORMAT_TEXT, FORMAT_JSON]


def to_text(system: DDESystem) -> str:
    """Eine Gleichung ``dX/dt = ...`` pro Spezies."""
    return "\n".join(system.format_equations()) + "\n"


def to_document(system: DDESystem) -> Dict[str, Any]:
    return {
        "variables": list(system.variables),
        "actions": list(system.actions),
        "stoichiometry": [list(row) for row in system.stoichiometry.entries],
        "kinetics": {action: expr_to_dict(system.kinetics[action]) for action in system.actions},
        "delays": dict(system.delays),
        "params": dict(system.params),
        "histories": {name: expr_to_dict(expr) for name, expr in system.histories.items()},
        "custom_histories": list(system.custom_histories),
        "t0": system.t0,
        "step_size": system.step_size,
    }


def render_dde(system: DDESystem, fmt: str = FORMAT_TEXT) -> str:
    """Rendert das DDE-System als Text oder JSON.

    Raises:
        ValueError: Bei unbekanntem Format
    """
    if fmt not in DDE_FORMATS:
        raise ValueError(f"Unbekanntes DDE-Format: {fmt} (erwartet: {', '.join(DDE_FORMATS)})")
    if fmt == FORMAT_TEXT:
        return to_text(system)
    return json.dumps(to_document(system), indent=2, ensure_ascii=False) + "\n"


def import_dde_json(data: Union[str, Dict[str, Any]]) -> DDESystem:
    """Stellt ein DDE-System aus seinem JSON-Export wieder her.

    Raises:
        ValueError: Bei unvollständigem oder inkonsistentem Dokument
    """
    document = json.loads(data) if isinstance(data, str) else data
    try:
        variables = tuple(document["variables"])
        actions = tuple(document["actions"])
        matrix = StoichiometryMatrix(
            species=variables,
            actions=actions,
            entries=tuple(tuple(int(v) for v in row) for row in document["stoichiometry"]),
        )
        system = DDESystem(
            variables=variables,
            actions=actions,
            stoichiometry=matrix,
            kinetics={action: expr_from_dict(document["kinetics"][action]) for action in actions},
            delays={action: float(document["delays"][action]) for action in actions},
            params={name: float(value) for name, value in document["params"].items()},
            histories={name: expr_from_dict(tree) for name, tree in document["histories"].items()},
            t0=float(document["t0"]),
            step_size=float(document["step_size"]),
            custom_histories=tuple(document.get("custom_histories", ())),
        )
    except (KeyError, TypeError) as err:
        raise ValueError(f"Ungültiges DDE-Dokument: {err}") from err
    if len(matrix.entries) != len(variables) or any(len(row) != len(actions) for row in matrix.entries):
        raise ValueError("Ungültiges DDE-Dokument: Dimension der Stöchiometriematrix passt nicht")
    return system


def solution_csv(grid: SolutionGrid) -> str:
    """Lösung als CSV ``time,segment,<species...>``."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["time", "segment", *grid.variables])
    for t, segment, row in zip(grid.times, grid.segments, grid.values):
        writer.writerow([repr(float(t)), segment, *(repr(float(v)) for v in row)])
    return buffer.getvalue()
