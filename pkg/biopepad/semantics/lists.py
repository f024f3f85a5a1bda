"""
Listenfunktionen über Scheduling-Listen und Initialisierung von Konfigurationen.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-14

Scheduling-Listen sind Tupel von ``ScheduleEntry`` in Einfügereihenfolge
(FIFO). Keine Funktion verändert ihr Argument.
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-14"

from typing import Optional, Sequence, Tuple

from ..core.model import (
    Coop,
    ProcessConfiguration,
    ProcessTree,
    RoleOp,
    ScheduleEntry,
    SpeciesState,
)

Schedule = Tuple[ScheduleEntry, ...]


def mu(process: ProcessTree) -> ProcessConfiguration:
    """Initialisiert einen Prozess: jedes Blatt erhält eine leere Liste."""
    if isinstance(process, Coop):
        return Coop(mu(process.left), mu(process.right), process.actions)
    return SpeciesState(process.name, process.level, ())


def phi(action: str, schedule: Sequence[ScheduleEntry]) -> Optional[ScheduleEntry]:
    """Erster Eintrag der Aktion in Listenreihenfolge oder ``None``."""
    for entry in schedule:
        if entry.action == action:
            return entry
    return None


def zeta(action: str, schedule: Sequence[ScheduleEntry]) -> Schedule:
    """Liste ohne den ersten Eintrag der Aktion (unverändert, falls keiner existiert)."""
    for index, entry in enumerate(schedule):
        if entry.action == action:
            return tuple(schedule[:index]) + tuple(schedule[index + 1:])
    return tuple(schedule)


def pi_products(schedule: Sequence[ScheduleEntry]) -> Schedule:
    """Teilfolge der Produkt-Einträge."""
    return tuple(entry for entry in schedule if entry.role is RoleOp.PRODUCT)


def rho_levels(schedule: Sequence[ScheduleEntry]) -> int:
    """Summe der Stöchiometrien aller Einträge."""
    return sum(entry.stoich for entry in schedule)
