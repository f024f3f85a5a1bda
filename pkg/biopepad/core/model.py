"""
Domänentypen für Bio-PEPAd-Modelle und Prozesskonfigurationen.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-13

Alle Werte sind nach der Konstruktion unveränderlich (frozen dataclasses,
Tupel für Listen). Die Dictionaries der SystemSpec werden nach dem Aufbau
nicht mehr verändert.

Abhängigkeiten:
  - dataclasses
  - enum
  - functools
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-13"

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Dict, FrozenSet, Iterator, List, Mapping, Tuple, Union

from ..const import OP_ACTIVATOR, OP_INHIBITOR, OP_MODIFIER, OP_PRODUCT, OP_REACTANT
from .expressions import BinOp, Expr, Num, Var, compile_expr, free_names


class RoleOp(enum.Enum):
    """Rolle einer Spezies in einer Aktion (geschlossene Aufzählung)."""
    REACTANT = OP_REACTANT
    PRODUCT = OP_PRODUCT
    ACTIVATOR = OP_ACTIVATOR
    INHIBITOR = OP_INHIBITOR
    MODIFIER = OP_MODIFIER

    @classmethod
    def from_operator(cls, operator: str) -> "RoleOp":
        """Konvertiert einen Operator der konkreten Syntax in eine Rolle.

        Raises:
            ValueError: Wenn der Operator unbekannt ist
        """
        for role in cls:
            if role.value == operator:
                return role
        raise ValueError(f"Unbekannter Rollenoperator: {operator}")

    @property
    def symbol(self) -> str:
        """Mathematisches Symbol der Rolle."""
        return _ROLE_SYMBOLS[self]

    @property
    def is_rate_input(self) -> bool:
        """Ob Massenwirkung die Konzentration dieser Rolle liest."""
        return self in (RoleOp.REACTANT, RoleOp.ACTIVATOR)


_ROLE_SYMBOLS = {
    RoleOp.REACTANT: "↓",
    RoleOp.PRODUCT: "↑",
    RoleOp.ACTIVATOR: "⊕",
    RoleOp.INHIBITOR: "⊖",
    RoleOp.MODIFIER: "⊙",
}


@dataclass(frozen=True)
class PrefixTerm:
    """Präfix ``(action, stoich) role`` eines Summanden."""
    action: str
    stoich: int
    role: RoleOp


@dataclass(frozen=True)
class SpeciesComponent:
    """Sequentielle Komponente: benannte Auswahl von Präfixtermen."""
    name: str
    terms: Tuple[PrefixTerm, ...]

    def terms_for(self, action: str) -> Tuple[PrefixTerm, ...]:
        return tuple(term for term in self.terms if term.action == action)


@dataclass(frozen=True)
class ScheduleEntry:
    """Eintrag ``(l, κ, α, op)`` der Scheduling-Liste einer Spezies."""
    level: int
    stoich: int
    action: str
    role: RoleOp

    def to_dict(self) -> Dict[str, Any]:
        return {
            "level": self.level,
            "stoich": self.stoich,
            "action": self.action,
            "role": self.role.value,
        }


@dataclass(frozen=True)
class SpeciesLeaf:
    """Blatt des initialen Prozesses: ``Name[initLevel]``."""
    name: str
    level: int


@dataclass(frozen=True)
class SpeciesState:
    """Blatt einer Konfiguration mit Level und FIFO-Scheduling-Liste."""
    name: str
    level: int
    schedule: Tuple[ScheduleEntry, ...] = ()


@dataclass(frozen=True)
class Coop:
    """Kooperation ``left <actions> right``."""
    left: "ProcessTree"
    right: "ProcessTree"
    actions: FrozenSet[str] = frozenset()


ProcessTree = Union[Coop, SpeciesLeaf, SpeciesState]
ProcessConfiguration = Union[Coop, SpeciesState]


def iter_leaves(tree: ProcessTree) -> Iterator[Union[SpeciesLeaf, SpeciesState]]:
    """Iteriert die Blätter eines Prozessbaums von links nach rechts."""
    if isinstance(tree, Coop):
        yield from iter_leaves(tree.left)
        yield from iter_leaves(tree.right)
    else:
        yield tree


def iter_cooperations(tree: ProcessTree) -> Iterator[Coop]:
    """Iteriert alle Kooperationsknoten (Präorder)."""
    if isinstance(tree, Coop):
        yield tree
        yield from iter_cooperations(tree.left)
        yield from iter_cooperations(tree.right)


@dataclass(frozen=True)
class MassAction:
    """Massenwirkungsgesetz ``MA(k)``."""
    constant: str


@dataclass(frozen=True)
class FunctionalRate:
    """Funktionale Rate als arithmetischer Ausdruck."""
    expr: Expr


RateExpr = Union[MassAction, FunctionalRate]


@dataclass(frozen=True)
class SpeciesQuantity:
    """Maximales und initiales Level einer Spezies."""
    max_level: int
    init_level: int


@dataclass(frozen=True)
class Compartment:
    """Kompartiment, nur als Metadaten übernommen."""
    name: str
    size: float


@dataclass(frozen=True)
class RateContextEntry:
    """Eintrag ``[S : op(l, κ)]`` eines Ratenkontexts."""
    species: str
    role: RoleOp
    level: int
    stoich: int


RateContext = Tuple[RateContextEntry, ...]


@dataclass(frozen=True)
class SystemSpec:
    """Vollständiges Bio-PEPAd-System.

    Attributes:
        quantities: Levels pro Spezies
        step_size: Schrittweite ``h`` (Konzentration pro Level)
        params: Parameter ``𝒦``
        rates: Funktionale Raten ``ℱ`` pro Aktion
        components: Komponentendefinitionen in Definitionsreihenfolge
        initial_process: Kooperationsbaum mit ``SpeciesLeaf``-Blättern
        delays: Verzögerung ``σ`` pro Aktion
        histories: Optionale History-Ausdrücke über ``t`` pro Spezies
        compartments: Kompartimente (Metadaten)
    """
    quantities: Dict[str, SpeciesQuantity]
    step_size: float
    params: Dict[str, float]
    rates: Dict[str, RateExpr]
    components: Dict[str, SpeciesComponent]
    initial_process: ProcessTree
    delays: Dict[str, float]
    histories: Dict[str, Expr] = field(default_factory=dict)
    compartments: Tuple[Compartment, ...] = ()

    @cached_property
    def species(self) -> Tuple[str, ...]:
        """Spezies in Blattreihenfolge des initialen Prozesses."""
        return tuple(leaf.name for leaf in iter_leaves(self.initial_process))

    @cached_property
    def actions(self) -> Tuple[str, ...]:
        """Aktionen in Reihenfolge ihres ersten Auftretens in den Komponenten."""
        seen: Dict[str, None] = {}
        for component in self.components.values():
            for term in component.terms:
                seen.setdefault(term.action, None)
        return tuple(seen)

    @cached_property
    def species_index(self) -> Dict[str, int]:
        return {name: index for index, name in enumerate(self.species)}

    def delay(self, action: str) -> float:
        return self.delays[action]

    def participants(self, action: str) -> Tuple[Tuple[str, PrefixTerm], ...]:
        """Alle (Spezies, Präfixterm)-Paare einer Aktion in Blattreihenfolge."""
        return self._participants.get(action, ())

    @cached_property
    def _participants(self) -> Dict[str, Tuple[Tuple[str, PrefixTerm], ...]]:
        result: Dict[str, List[Tuple[str, PrefixTerm]]] = {}
        for name in self.species:
            component = self.components.get(name)
            if component is None:
                continue
            for term in component.terms:
                result.setdefault(term.action, []).append((name, term))
        return {action: tuple(items) for action, items in result.items()}

    def kinetic_law(self, action: str) -> Expr:
        """Kinetisches Gesetz ``f_α`` als Ausdruck über Konzentrationen.

        ``MA(k)`` wird zu ``k * S1^κ1 * ...`` über Reaktanten und Aktivatoren.

        Raises:
            KeyError: Wenn für die Aktion keine Rate definiert ist
        """
        rate = self.rates[action]
        if isinstance(rate, FunctionalRate):
            return rate.expr
        law: Expr = Var(rate.constant)
        for name, term in self.participants(action):
            if not term.role.is_rate_input:
                continue
            factor: Expr = Var(name)
            if term.stoich != 1:
                factor = BinOp("^", factor, Num(float(term.stoich)))
            law = BinOp("*", law, factor)
        return law

    def rate_reads(self, action: str) -> FrozenSet[str]:
        """Spezies, deren Level die Rate der Aktion beeinflusst."""
        return self._rate_reads.get(action, frozenset())

    @cached_property
    def _rate_reads(self) -> Dict[str, FrozenSet[str]]:
        species = set(self.species)
        reads: Dict[str, FrozenSet[str]] = {}
        for action in self.actions:
            if action not in self.rates:
                continue
            reads[action] = frozenset(free_names(self.kinetic_law(action)) & species)
        return reads

    @cached_property
    def compiled_rate_laws(self) -> Dict[str, Callable[[Mapping[Any, float]], float]]:
        """Vorkompilierte kinetische Gesetze pro Aktion."""
        return {
            action: compile_expr(self.kinetic_law(action))
            for action in self.actions
            if action in self.rates
        }

    def with_delays(self, delays: Mapping[str, float]) -> "SystemSpec":
        """Gibt eine Kopie mit ersetzten Verzögerungen zurück."""
        return SystemSpec(
            quantities=dict(self.quantities),
            step_size=self.step_size,
            params=dict(self.params),
            rates=dict(self.rates),
            components=dict(self.components),
            initial_process=self.initial_process,
            delays=dict(delays),
            histories=dict(self.histories),
            compartments=self.compartments,
        )

    def __getstate__(self) -> Dict[str, Any]:
        # Closures der kompilierten Raten sind nicht picklebar
        state = dict(self.__dict__)
        state.pop("compiled_rate_laws", None)
        return state

    def __setstate__(self, state: Dict[str, Any]) -> None:
        self.__dict__.update(state)
