"""
Validierung einer SystemSpec gegen die Modellinvarianten.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-13

Verletzungen sind Daten, keine Fehler: ``validate`` gibt eine Liste zurück,
die leer ist, wenn das Modell gültig ist.

Abhängigkeiten:
  - math
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-13"

import logging
import math
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Set

from ..const import TIME_VARIABLE
from .expressions import free_names
from .model import (
    FunctionalRate,
    MassAction,
    RoleOp,
    SpeciesLeaf,
    SpeciesState,
    SystemSpec,
    iter_cooperations,
    iter_leaves,
)

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Violation:
    """Eine verletzte Invariante.

    Attributes:
        location: Art der Definition (``species``, ``rate``, ``delay``, ...)
        subject: Betroffener Name (Spezies, Aktion, Parameter)
        message: Beschreibung
    """
    location: str
    subject: str
    message: str

    def __str__(self) -> str:
        return f"{self.location} '{self.subject}': {self.message}"


def _alphabet(tree, spec: SystemSpec) -> Set[str]:
    actions: Set[str] = set()
    for leaf in iter_leaves(tree):
        component = spec.components.get(leaf.name)
        if component is not None:
            actions.update(term.action for term in component.terms)
    return actions


def validate(spec: SystemSpec) -> List[Violation]:
    """Prüft alle Modellinvarianten.

    Args:
        spec: Zu prüfende Spezifikation

    Returns:
        Liste aller Verletzungen; leer für ein gültiges Modell
    """
    violations: List[Violation] = []

    def report(location: str, subject: str, message: str) -> None:
        violations.append(Violation(location, subject, message))

    if not (isinstance(spec.step_size, (int, float)) and math.isfinite(spec.step_size) and spec.step_size > 0):
        report("step", "h", f"step size must be positive, got {spec.step_size!r}")

    for name, value in spec.params.items():
        if not math.isfinite(value):
            report("param", name, f"value is not finite: {value!r}")

    # Komponenten und Präfixterme
    component_actions: Set[str] = set()
    for name, component in spec.components.items():
        if component.name != name:
            report("component", name, f"name mismatch: {component.name}")
        if not component.terms:
            report("component", name, "component has no prefix terms")
        for term in component.terms:
            component_actions.add(term.action)
            if term.stoich < 1:
                report("component", name, f"stoichiometry of '{term.action}' must be at least 1")
        pairs = Counter((term.action, term.role) for term in component.terms)
        for (action, role), count in pairs.items():
            if count > 1:
                report("component", name, f"more than one term for ({action}, {role.value})")
        roles_per_action: Dict[str, Set[RoleOp]] = {}
        for term in component.terms:
            roles_per_action.setdefault(term.action, set()).add(term.role)
        for action, roles in roles_per_action.items():
            if len(roles) > 1:
                report(
                    "component",
                    name,
                    f"species takes part in action '{action}' in more than one role",
                )
        if name not in spec.quantities:
            report("species", name, "missing species declaration")

    # Blätter des initialen Prozesses
    leaf_counts: Counter = Counter()
    for leaf in iter_leaves(spec.initial_process):
        leaf_counts[leaf.name] += 1
        if not isinstance(leaf, (SpeciesLeaf, SpeciesState)):
            report("system", str(leaf), "unknown leaf type")
            continue
        if leaf.name not in spec.components:
            report("system", leaf.name, "species has no component definition")
        quantity = spec.quantities.get(leaf.name)
        if quantity is None:
            continue
        if leaf.level != quantity.init_level:
            report(
                "system",
                leaf.name,
                f"initial level {leaf.level} differs from declaration ({quantity.init_level})",
            )
    for name, count in leaf_counts.items():
        if count > 1:
            report("system", name, f"species occurs {count} times in the system")

    for name in spec.components:
        if name not in leaf_counts:
            report("component", name, "component does not occur in the system")

    for name, quantity in spec.quantities.items():
        if quantity.max_level < 1:
            report("species", name, f"max must be at least 1, got {quantity.max_level}")
        if not 0 <= quantity.init_level <= quantity.max_level:
            report(
                "species",
                name,
                f"init {quantity.init_level} is outside [0, {quantity.max_level}]",
            )
        if name not in spec.components:
            report("species", name, "declaration without component")

    # Kooperationsmengen
    for coop in iter_cooperations(spec.initial_process):
        for action in sorted(coop.actions):
            if action not in component_actions:
                report("system", action, "action in cooperation set does not occur in any component")
        shared = _alphabet(coop.left, spec) & _alphabet(coop.right, spec)
        for action in sorted(shared - coop.actions):
            report(
                "system",
                action,
                "action occurs in both operands but is missing from the cooperation set",
            )

    # Verzögerungen
    for action in sorted(component_actions):
        if action not in spec.delays:
            report("delay", action, "no delay defined")
    for action, value in spec.delays.items():
        if action not in component_actions:
            report("delay", action, "delay for unknown action")
        if not (math.isfinite(value) and value >= 0):
            report("delay", action, f"delay must be finite and non-negative, got {value!r}")

    # Raten
    species_names = set(spec.quantities) | set(spec.components)
    for action in sorted(component_actions):
        if action not in spec.rates:
            report("rate", action, "no rate defined")
    for action, rate in spec.rates.items():
        if action not in component_actions:
            report("rate", action, "rate for unknown action")
        if isinstance(rate, MassAction):
            if rate.constant not in spec.params:
                report("rate", action, f"mass-action constant '{rate.constant}' is not a parameter")
        elif isinstance(rate, FunctionalRate):
            participants = {
                species
                for species, component in spec.components.items()
                if component.terms_for(action)
            }
            for name in sorted(free_names(rate.expr)):
                if name in spec.params:
                    continue
                if name not in species_names:
                    report("rate", action, f"unresolved name '{name}'")
                elif name not in participants:
                    report(
                        "rate",
                        action,
                        f"species '{name}' is read but does not take part (declare it as modifier)",
                    )

    # History-Ausdrücke
    for name, expr in spec.histories.items():
        if name not in species_names:
            report("history", name, "history for unknown species")
        for free in sorted(free_names(expr)):
            if free != TIME_VARIABLE and free not in spec.params:
                report("history", name, f"unresolved name '{free}'")

    if violations:
        _LOGGER.debug(f"Validierung: {len(violations)} Verletzungen")
    return violations

