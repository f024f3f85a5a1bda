"""
Export des SLTS als DOT und JSON.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-14

DOT: Knoten mit ``(levels):pending``, durchgezogene Kanten für Starts,
gestrichelte für Abschlüsse. JSON: Zustände mit vollständigen
Scheduling-Listen, Kanten mit Aktion, Phase, Rate und Verzögerung.
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-14"

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Union

from ..const import FORMAT_DOT, FORMAT_JSON
from ..core.expressions import format_number
from ..core.model import iter_leaves
from .relations import TransitionPhase
from .slts import SLTS, levels, pending_count, state_label

_LOGGER = logging.getLogger(__name__)

SLTS_FORMATS = [FORMAT_DOT, FORMAT_JSON]


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(slts: SLTS) -> str:
    """Rendert das SLTS als Graphviz-DOT."""
    lines: List[str] = ["digraph slts {", "  node [shape=box];"]
    if slts.truncated:
        lines.append(f"  // truncated: {slts.truncation_reason}")
    for state_id, cfg in slts.states():
        attrs = f"label={_quote(state_label(cfg))}"
        if state_id == slts.initial:
            attrs += ", penwidth=2"
        lines.append(f"  s{state_id} [{attrs}];")
    for source, label, target in slts.edges():
        style = "solid" if label.phase is TransitionPhase.START else "dashed"
        text = f"{label} r={format_number(label.rate)} d={format_number(label.delay)}"
        lines.append(f"  s{source} -> s{target} [label={_quote(text)}, style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_document(slts: SLTS) -> Dict[str, Any]:
    """JSON-fähiges Dokument des SLTS."""
    states = []
    for state_id, cfg in slts.states():
        states.append(
            {
                "id": state_id,
                "label": state_label(cfg),
                "levels": list(levels(cfg)),
                "pending": pending_count(cfg),
                "leaves": [
                    {
                        "species": leaf.name,
                        "level": leaf.level,
                        "schedule": [entry.to_dict() for entry in leaf.schedule],
                    }
                    for leaf in iter_leaves(cfg)
                ],
            }
        )
    edges = [
        {
            "source": source,
            "target": target,
            "action": label.action,
            "phase": label.phase.value,
            "rate": label.rate,
            "delay": label.delay,
        }
        for source, label, target in slts.edges()
    ]
    return {
        "species": list(slts.spec.species),
        "initial": slts.initial,
        "truncated": slts.truncated,
        "truncation_reason": slts.truncation_reason,
        "truncation_action": slts.truncation_action,
        "states": states,
        "edges": edges,
    }


def to_json(slts: SLTS) -> str:
    return json.dumps(to_document(slts), indent=2, ensure_ascii=False) + "\n"


def render_slts(slts: SLTS, fmt: str = FORMAT_DOT) -> str:
    """Rendert das SLTS im gewünschten Format.

    Raises:
        ValueError: Bei unbekanntem Format
    """
    if fmt not in SLTS_FORMATS:
        raise ValueError(f"Unbekanntes SLTS-Format: {fmt} (erwartet: {', '.join(SLTS_FORMATS)})")
    return to_dot(slts) if fmt == FORMAT_DOT else to_json(slts)


def write_slts(slts: SLTS, path: Union[str, Path], fmt: str = FORMAT_DOT) -> Path:
    """Schreibt das SLTS in eine Datei und gibt den Pfad zurück."""
    path = Path(path)
    path.write_text(render_slts(slts, fmt), encoding="utf-8")
    _LOGGER.info(f"SLTS geschrieben: {path} ({fmt})")
    return path
