"""
Stöchiometriematrix ``D`` (Spezies × Aktionen).

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-13

Abhängigkeiten:
  - numpy
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-13"

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Tuple

import numpy as np

from ..exceptions import StoichiometryError
from .model import RoleOp, SystemSpec


@dataclass(frozen=True)
class StoichiometryMatrix:
    """Ganzzahlige Netto-Leveländerung pro Spezies und Aktion."""
    species: Tuple[str, ...]
    actions: Tuple[str, ...]
    entries: Tuple[Tuple[int, ...], ...]

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(len(self.species), len(self.actions))

    def entry(self, species: str, action: str) -> int:
        return self.entries[self.species.index(species)][self.actions.index(action)]

    def column(self, action: str) -> Dict[str, int]:
        """Nicht-null Einträge einer Aktion als Spezies→Änderung."""
        col = self.actions.index(action)
        return {
            name: row[col]
            for name, row in zip(self.species, self.entries)
            if row[col] != 0
        }


def stoichiometry_matrix(spec: SystemSpec) -> StoichiometryMatrix:
    """Leitet die Stöchiometriematrix aus den Komponenten ab.

    Eintrag ``(S, α)`` ist ``+κ`` für ``(α, κ) >>``, ``-κ`` für ``(α, κ) <<``
    und 0 für Aktivatoren, Inhibitoren, Modifikatoren oder Nicht-Teilnahme.
    Die Verzögerungen gehen nicht ein.

    Raises:
        StoichiometryError: Wenn eine Spezies für eine Aktion Reaktant und Produkt ist
    """
    rows = []
    for name in spec.species:
        component = spec.components[name]
        row = []
        for action in spec.actions:
            value = 0
            roles = set()
            for term in component.terms_for(action):
                roles.add(term.role)
                if term.role is RoleOp.REACTANT:
                    value -= term.stoich
                elif term.role is RoleOp.PRODUCT:
                    value += term.stoich
            if RoleOp.REACTANT in roles and RoleOp.PRODUCT in roles:
                raise StoichiometryError(name, action)
            row.append(value)
        rows.append(tuple(row))
    return StoichiometryMatrix(species=spec.species, actions=spec.actions, entries=tuple(rows))
