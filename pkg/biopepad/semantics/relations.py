"""
Start-, Abschluss- und stochastische Relation der Starting-Terminating-Semantik.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-14

Alle Funktionen sind rein: Konfiguration hinein, Nachfolger heraus.
Innerhalb eines Kooperationsknotens synchronisieren Aktionen der
Kooperationsmenge beide Seiten (Kontexte werden konkateniert), alle anderen
Aktionen laufen in genau einer Seite.

Abhängigkeiten:
  - biopepad.core
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-14"

import enum
import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..const import CAPACITY_LITERAL, CAPACITY_MODES, DEFAULT_CAPACITY_MODE
from ..core.model import (
    Coop,
    ProcessConfiguration,
    RateContext,
    RateContextEntry,
    RoleOp,
    ScheduleEntry,
    SpeciesState,
    SystemSpec,
)
from ..core.rates import eval_rate
from ..exceptions import CorruptConfigurationError
from .lists import phi, pi_products, rho_levels, zeta

_LOGGER = logging.getLogger(__name__)

_Alternatives = Dict[str, List[Tuple[RateContext, ProcessConfiguration]]]


class TransitionPhase(enum.Enum):
    """Phase einer Transition: Start (α⁺) oder Abschluss (α⁻)."""
    START = "start"
    COMPLETE = "complete"

    @property
    def marker(self) -> str:
        return "+" if self is TransitionPhase.START else "-"


@dataclass(frozen=True)
class TransitionLabel:
    """Kantenbeschriftung ``(α±, r, σ)`` mit dem Ratenkontext."""
    action: str
    phase: TransitionPhase
    rate: float
    delay: float
    ctx: RateContext

    def __str__(self) -> str:
        return f"{self.action}{self.phase.marker}"


@dataclass(frozen=True)
class Derivation:
    """Ergebnis einer Start- oder Abschlussableitung."""
    action: str
    ctx: RateContext
    successor: ProcessConfiguration


def _check_capacity_mode(capacity: str) -> None:
    if capacity not in CAPACITY_MODES:
        raise ValueError(f"Unbekannter Kapazitätsmodus: {capacity}")


def product_capacity_ok(level: int, pending: int, stoich: int, max_level: int, capacity: str) -> bool:
    """Kapazitätsregel für Produkte.

    ``strict``: ``l + ρ(π L) + κ ≤ N``; ``literal``: ``0 ≤ l + ρ(π L) ≤ N``.
    """
    if capacity == CAPACITY_LITERAL:
        return 0 <= level + pending <= max_level
    return 0 <= level and level + pending + stoich <= max_level


def _start_leaf(leaf: SpeciesState, spec: SystemSpec, capacity: str) -> _Alternatives:
    component = spec.components[leaf.name]
    max_level = spec.quantities[leaf.name].max_level
    level = leaf.level
    result: _Alternatives = {}
    for term in component.terms:
        stoich = term.stoich
        new_level = level
        if term.role is RoleOp.REACTANT:
            if not stoich <= level <= max_level:
                continue
            new_level = level - stoich
        elif term.role is RoleOp.PRODUCT:
            pending = rho_levels(pi_products(leaf.schedule))
            if not product_capacity_ok(level, pending, stoich, max_level, capacity):
                continue
        elif term.role is RoleOp.ACTIVATOR:
            if not stoich <= level <= max_level:
                continue
        elif not 1 <= level <= max_level:
            continue
        entry = ScheduleEntry(level, stoich, term.action, term.role)
        successor = SpeciesState(leaf.name, new_level, leaf.schedule + (entry,))
        ctx = (RateContextEntry(leaf.name, term.role, level, stoich),)
        result.setdefault(term.action, []).append((ctx, successor))
    return result


def _complete_leaf(leaf: SpeciesState) -> _Alternatives:
    result: _Alternatives = {}
    for action in dict.fromkeys(entry.action for entry in leaf.schedule):
        entry = phi(action, leaf.schedule)
        new_level = leaf.level + entry.stoich if entry.role is RoleOp.PRODUCT else leaf.level
        successor = SpeciesState(leaf.name, new_level, zeta(action, leaf.schedule))
        ctx = (RateContextEntry(leaf.name, entry.role, entry.level, entry.stoich),)
        result[action] = [(ctx, successor)]
    return result


def _compose(node: Coop, left: _Alternatives, right: _Alternatives, completing: bool) -> _Alternatives:
    result: _Alternatives = {}
    for action in list(left) + [a for a in right if a not in left]:
        if action in node.actions:
            if action in left and action in right:
                result[action] = [
                    (ctx_l + ctx_r, Coop(left_cfg, right_cfg, node.actions))
                    for ctx_l, left_cfg in left[action]
                    for ctx_r, right_cfg in right[action]
                ]
            elif completing:
                raise CorruptConfigurationError(
                    action, "ausstehend nur in einem Operanden einer Synchronisation"
                )
            continue
        items = [(ctx, Coop(cfg, node.right, node.actions)) for ctx, cfg in left.get(action, [])]
        items += [(ctx, Coop(node.left, cfg, node.actions)) for ctx, cfg in right.get(action, [])]
        result[action] = items
    return result


def _starts(cfg: ProcessConfiguration, spec: SystemSpec, capacity: str) -> _Alternatives:
    if isinstance(cfg, Coop):
        return _compose(cfg, _starts(cfg.left, spec, capacity), _starts(cfg.right, spec, capacity), False)
    return _start_leaf(cfg, spec, capacity)


def _completions(cfg: ProcessConfiguration) -> _Alternatives:
    if isinstance(cfg, Coop):
        return _compose(cfg, _completions(cfg.left), _completions(cfg.right), True)
    return _complete_leaf(cfg)


def _flatten(alternatives: _Alternatives) -> List[Derivation]:
    return [
        Derivation(action, ctx, successor)
        for action, items in alternatives.items()
        for ctx, successor in items
    ]


def start_transitions(
    cfg: ProcessConfiguration,
    spec: SystemSpec,
    capacity: str = DEFAULT_CAPACITY_MODE,
) -> List[Derivation]:
    """Alle ableitbaren Starts ``α⁺`` einer Konfiguration.

    Args:
        cfg: Aktuelle Konfiguration
        spec: Systemspezifikation
        capacity: ``strict`` oder ``literal`` (Lesart der Produkt-Kapazitätsregel)

    Returns:
        Ein Ergebnis pro ableitbarem Start; jedes teilnehmende Blatt hat seinen
        Eintrag ``(l, κ, α, op)`` an die Scheduling-Liste angehängt
    """
    _check_capacity_mode(capacity)
    return _flatten(_starts(cfg, spec, capacity))


def completion_transitions(cfg: ProcessConfiguration, spec: SystemSpec) -> List[Derivation]:
    """Alle Abschlüsse ``α⁻`` einer Konfiguration.

    Pro Blatt wird der älteste Eintrag der Aktion entfernt; Produkte
    gewinnen dessen ``κ`` Level.

    Raises:
        CorruptConfigurationError: Wenn eine synchronisierte Aktion nur auf
            einer Seite aussteht
    """
    return _flatten(_completions(cfg))


def stochastic_transitions(
    spec: SystemSpec,
    cfg: ProcessConfiguration,
    capacity: str = DEFAULT_CAPACITY_MODE,
) -> List[Tuple[TransitionLabel, ProcessConfiguration]]:
    """Vereinigung von Abschlüssen und Starts mit Raten und Verzögerungen.

    Abschlüsse stehen vor Starts. Starts mit Rate 0 (nicht feuernd) entfallen.

    Raises:
        RateEvaluationError: Wenn eine Rate nicht auswertbar ist
    """
    result: List[Tuple[TransitionLabel, ProcessConfiguration]] = []
    for derivation in completion_transitions(cfg, spec):
        rate = eval_rate(derivation.action, derivation.ctx, spec)
        label = TransitionLabel(
            derivation.action,
            TransitionPhase.COMPLETE,
            rate,
            spec.delays[derivation.action],
            derivation.ctx,
        )
        result.append((label, derivation.successor))
    for derivation in start_transitions(cfg, spec, capacity):
        rate = eval_rate(derivation.action, derivation.ctx, spec)
        if rate == 0.0:
            continue
        label = TransitionLabel(
            derivation.action,
            TransitionPhase.START,
            rate,
            spec.delays[derivation.action],
            derivation.ctx,
        )
        result.append((label, derivation.successor))
    return result
