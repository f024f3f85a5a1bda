"""
Exploration des stochastischen beschrifteten Transitionssystems (SLTS).

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-14

Breitensuche ab ``μ(P)`` über ``stochastic_transitions``. Zustände werden
über einen kanonischen Schlüssel dedupliziert; die Blattreihenfolge ist
durch den Prozessbaum fest, Scheduling-Listen werden elementweise in
Reihenfolge verglichen. Im Modus ``rate`` wird das gespeicherte Level eines
Eintrags nur verglichen, wenn die Rate seiner Aktion die Spezies liest.

Das Ergebnis liegt als networkx-MultiDiGraph vor; Knoten-IDs entsprechen
der Entdeckungsreihenfolge, der Initialzustand hat die ID 0.

Abhängigkeiten:
  - networkx
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-14"

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, Hashable, Iterator, List, Optional, Tuple

import networkx as nx

from ..const import (
    CANONICAL_EXACT,
    CANONICAL_MODES,
    DEFAULT_CANONICAL_MODE,
    DEFAULT_CAPACITY_MODE,
    DEFAULT_MAX_PENDING_PER_SPECIES,
    DEFAULT_MAX_STATES,
)
from ..core.model import ProcessConfiguration, SystemSpec, iter_leaves
from ..exceptions import ExplorationLimitError
from .lists import mu
from .relations import TransitionLabel, stochastic_transitions

_LOGGER = logging.getLogger(__name__)

TRUNCATED_MAX_STATES = "max_states"
TRUNCATED_MAX_PENDING = "max_pending"


@dataclass(frozen=True)
class ExplorationLimits:
    """Grenzen der Exploration."""
    max_states: int = DEFAULT_MAX_STATES
    max_pending_per_species: int = DEFAULT_MAX_PENDING_PER_SPECIES


def canonical_key(cfg: ProcessConfiguration, spec: SystemSpec, mode: str = DEFAULT_CANONICAL_MODE) -> Hashable:
    """Kanonischer Schlüssel einer Konfiguration.

    Args:
        cfg: Konfiguration
        spec: Systemspezifikation (für die von Raten gelesenen Spezies)
        mode: ``rate`` oder ``exact``

    Returns:
        Hashbares Tupel, gleich für gleichwertige Konfigurationen
    """
    exact = mode == CANONICAL_EXACT
    leaves = []
    for leaf in iter_leaves(cfg):
        entries = tuple(
            (
                entry.level if exact or leaf.name in spec.rate_reads(entry.action) else None,
                entry.stoich,
                entry.action,
                entry.role.value,
            )
            for entry in leaf.schedule
        )
        leaves.append((leaf.name, leaf.level, entries))
    return tuple(leaves)


def pending_count(cfg: ProcessConfiguration) -> int:
    """Anzahl laufender Aktionsinstanzen.

    Pro Aktion zählt das Maximum der Einträge über alle Blätter, damit eine
    synchronisierte Instanz nur einmal gezählt wird.
    """
    per_action: Dict[str, int] = {}
    for leaf in iter_leaves(cfg):
        counts: Dict[str, int] = {}
        for entry in leaf.schedule:
            counts[entry.action] = counts.get(entry.action, 0) + 1
        for action, count in counts.items():
            per_action[action] = max(per_action.get(action, 0), count)
    return sum(per_action.values())


def levels(cfg: ProcessConfiguration) -> Tuple[int, ...]:
    return tuple(leaf.level for leaf in iter_leaves(cfg))


def state_label(cfg: ProcessConfiguration) -> str:
    """Beschriftung ``(l1,l2,...):pending``."""
    return f"({','.join(str(level) for level in levels(cfg))}):{pending_count(cfg)}"


class SLTS:
    """Exploriertes SLTS über einem networkx-MultiDiGraph."""

    def __init__(
        self,
        spec: SystemSpec,
        graph: nx.MultiDiGraph,
        truncated: bool = False,
        truncation_reason: Optional[str] = None,
        truncation_action: Optional[str] = None,
    ):
        self.spec = spec
        self.graph = graph
        self.initial = 0
        self.truncated = truncated
        self.truncation_reason = truncation_reason
        self.truncation_action = truncation_action

    @property
    def num_states(self) -> int:
        return self.graph.number_of_nodes()

    @property
    def num_transitions(self) -> int:
        return self.graph.number_of_edges()

    def state(self, state_id: int) -> ProcessConfiguration:
        return self.graph.nodes[state_id]["config"]

    def states(self) -> Iterator[Tuple[int, ProcessConfiguration]]:
        for state_id in sorted(self.graph.nodes):
            yield state_id, self.graph.nodes[state_id]["config"]

    def edges(self) -> List[Tuple[int, TransitionLabel, int]]:
        """Alle Kanten, kanonisch sortiert."""
        edges = [(source, data["label"], target) for source, target, data in self.graph.edges(data=True)]
        edges.sort(key=lambda e: (e[0], e[1].phase.value, e[1].action, e[2]))
        return edges

    def outgoing(self, state_id: int) -> List[Tuple[TransitionLabel, int]]:
        return [
            (data["label"], target)
            for _, target, data in self.graph.out_edges(state_id, data=True)
        ]

    def labels(self) -> List[str]:
        return [state_label(cfg) for _, cfg in self.states()]

    def summary(self) -> str:
        text = f"{self.num_states} states, {self.num_transitions} transitions"
        if self.truncated:
            suffix = f" (action '{self.truncation_action}')" if self.truncation_action else ""
            text += f" [truncated: {self.truncation_reason}{suffix}]"
        return text


class SLTSExplorer:
    """Breitensuche über der stochastischen Relation."""

    def __init__(
        self,
        spec: SystemSpec,
        limits: ExplorationLimits = ExplorationLimits(),
        capacity: str = DEFAULT_CAPACITY_MODE,
        canonical: str = DEFAULT_CANONICAL_MODE,
    ):
        if canonical not in CANONICAL_MODES:
            raise ValueError(f"Unbekannter Kanonisierungsmodus: {canonical}")
        self._spec = spec
        self._limits = limits
        self._capacity = capacity
        self._canonical = canonical
        self._logger = logging.getLogger(f"{__name__}.SLTSExplorer")

    def explore(self, strict: bool = False) -> SLTS:
        """Exploriert das SLTS.

        Args:
            strict: Bei erreichtem Limit ``ExplorationLimitError`` werfen statt
                ein als abgeschnitten markiertes Teil-SLTS zurückzugeben

        Raises:
            ExplorationLimitError: Nur mit ``strict=True``
        """
        spec = self._spec
        graph = nx.MultiDiGraph()
        initial = mu(spec.initial_process)
        index: Dict[Hashable, int] = {canonical_key(initial, spec, self._canonical): 0}
        graph.add_node(0, config=initial)
        queue = deque([0])
        truncation: Optional[Tuple[str, Optional[str]]] = None

        def truncate(reason: str, action: Optional[str]) -> None:
            nonlocal truncation
            if strict:
                raise ExplorationLimitError(reason, action)
            if truncation is None:
                truncation = (reason, action)
                self._logger.warning(
                    f"Exploration abgeschnitten: {reason}"
                    + (f" (Aktion '{action}')" if action else "")
                )

        while queue:
            source = queue.popleft()
            cfg = graph.nodes[source]["config"]
            for label, successor in stochastic_transitions(spec, cfg, self._capacity):
                if max(len(leaf.schedule) for leaf in iter_leaves(successor)) > self._limits.max_pending_per_species:
                    truncate(TRUNCATED_MAX_PENDING, label.action)
                    continue
                key = canonical_key(successor, spec, self._canonical)
                target = index.get(key)
                if target is None:
                    if len(index) >= self._limits.max_states:
                        truncate(TRUNCATED_MAX_STATES, None)
                        continue
                    target = len(index)
                    index[key] = target
                    graph.add_node(target, config=successor)
                    queue.append(target)
                graph.add_edge(source, target, label=label)

        slts = SLTS(
            spec,
            graph,
            truncated=truncation is not None,
            truncation_reason=truncation[0] if truncation else None,
            truncation_action=truncation[1] if truncation else None,
        )
        self._logger.info(f"SLTS exploriert: {slts.summary()}")
        return slts


def explore_slts(
    spec: SystemSpec,
    limits: ExplorationLimits = ExplorationLimits(),
    capacity: str = DEFAULT_CAPACITY_MODE,
    canonical: str = DEFAULT_CANONICAL_MODE,
    strict: bool = False,
) -> SLTS:
    """Exploriert das SLTS eines gültigen Modells.

    Args:
        spec: Gültige Spezifikation
        limits: Zustands- und Pending-Grenzen
        capacity: Lesart der Produkt-Kapazitätsregel
        canonical: ``rate`` (Standard) oder ``exact``
        strict: Limit als Fehler statt Abschneidemarkierung

    Returns:
        SLTS, ggf. mit ``truncated=True``
    """
    return SLTSExplorer(spec, limits, capacity, canonical).explore(strict)
