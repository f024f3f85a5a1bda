"""
Übersetzung eines Bio-PEPAd-Systems in ein DDE-System mit konstanten Verzögerungen.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-17

Die rechte Seite ist ``D × ν``: ``D`` ist die Stöchiometriematrix, ``ν``
enthält pro Aktion das kinetische Gesetz, in dem jede Speziesreferenz
durch ``S(t - σ(α))`` ersetzt ist (bei ``σ(α) = 0`` bleibt ``S(t)``).
Die History ist standardmäßig konstant ``h · l_{S,0}``.

Abhängigkeiten:
  - sympy (symbolische Darstellung der Gleichungen)
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-17"

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Tuple

import sympy

from ..const import DEFAULT_T0, TIME_VARIABLE
from ..core.expressions import (
    BinOp,
    Delayed,
    Expr,
    Neg,
    Num,
    Var,
    evaluate,
    format_expr,
    format_number,
    substitute,
)
from ..core.model import SystemSpec, iter_leaves
from ..core.stoichiometry import StoichiometryMatrix, stoichiometry_matrix
from ..exceptions import BioPepadError

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class DDESystem:
    """DDE-System ``dx/dt = D × ν(t)``.

    Attributes:
        variables: Spezies in Zeilenreihenfolge von ``D``
        actions: Aktionen in Spaltenreihenfolge von ``D``
        stoichiometry: Stöchiometriematrix ``D``
        kinetics: Verzögertes kinetisches Gesetz pro Aktion
        delays: Verzögerung pro Aktion
        params: Parameterwerte
        histories: History-Ausdruck über ``t`` pro Spezies
        t0: Startzeit
    """
    variables: Tuple[str, ...]
    actions: Tuple[str, ...]
    stoichiometry: StoichiometryMatrix
    kinetics: Dict[str, Expr]
    delays: Dict[str, float]
    params: Dict[str, float]
    histories: Dict[str, Expr]
    t0: float = DEFAULT_T0
    step_size: float = 1.0
    custom_histories: Tuple[str, ...] = field(default=())

    @property
    def max_delay(self) -> float:
        return max(self.delays.values(), default=0.0)

    @property
    def distinct_delays(self) -> List[float]:
        return sorted({d for d in self.delays.values() if d > 0})

    def initial_values(self) -> Dict[str, float]:
        """Startwerte ``x(t0)`` aus den History-Ausdrücken."""
        env: Dict = dict(self.params)
        env[TIME_VARIABLE] = self.t0
        return {name: evaluate(self.histories[name], env) for name in self.variables}

    def equation(self, species: str) -> Expr:
        """Rechte Seite ``Σ_α D(S, α) · ν_α`` als Ausdruck (Konvention: ``-`` vor negativen Koeffizienten)."""
        row = self.stoichiometry.entries[self.variables.index(species)]
        result = None
        for coefficient, action in zip(row, self.actions):
            if coefficient == 0:
                continue
            law = self.kinetics[action]
            term = law if abs(coefficient) == 1 else _scale(float(abs(coefficient)), law)
            if result is None:
                result = term if coefficient > 0 else Neg(term)
            else:
                result = BinOp("+" if coefficient > 0 else "-", result, term)
        return result if result is not None else Num(0.0)

    def format_equation(self, species: str) -> str:
        return f"d{species}/dt = {format_expr(self.equation(species))}"

    def format_equations(self) -> List[str]:
        return [self.format_equation(name) for name in self.variables]

    @cached_property
    def symbolic_equations(self) -> Dict[str, sympy.Expr]:
        """Rechte Seiten als sympy-Ausdrücke; ``S(t - σ)`` als angewandte Funktion."""
        converter = _SympyConverter(self.variables)
        return {name: sympy.expand(converter.convert(self.equation(name))) for name in self.variables}

    def equation_terms(self, species: str) -> frozenset:
        """Menge der Summanden der expandierten rechten Seite."""
        return frozenset(sympy.Add.make_args(self.symbolic_equations[species]))


def _scale(factor: float, law: Expr) -> Expr:
    if isinstance(law, BinOp) and law.op == "*":
        return BinOp("*", _scale(factor, law.left), law.right)
    return BinOp("*", Num(factor), law)


class _SympyConverter:
    def __init__(self, variables: Tuple[str, ...]):
        self._variables = set(variables)
        self.t = sympy.Symbol(TIME_VARIABLE)

    def number(self, value: float) -> sympy.Expr:
        return sympy.Integer(int(value)) if float(value).is_integer() else sympy.Float(value)

    def convert(self, expr: Expr) -> sympy.Expr:
        if isinstance(expr, Num):
            return self.number(expr.value)
        if isinstance(expr, Var):
            if expr.name in self._variables:
                return sympy.Function(expr.name)(self.t)
            if expr.name == TIME_VARIABLE:
                return self.t
            return sympy.Symbol(expr.name)
        if isinstance(expr, Delayed):
            return sympy.Function(expr.name)(self.t - self.number(expr.delay))
        if isinstance(expr, Neg):
            return -self.convert(expr.operand)
        left, right = self.convert(expr.left), self.convert(expr.right)
        if expr.op == "+":
            return left + right
        if expr.op == "-":
            return left - right
        if expr.op == "*":
            return left * right
        if expr.op == "/":
            return left / right
        return left ** right


def delayed_law(law: Expr, species: Tuple[str, ...], delay: float) -> Expr:
    """Ersetzt jede Speziesreferenz durch ``S(t - delay)``; bei 0 unverändert."""
    if delay == 0.0:
        return law
    names = set(species)
    return substitute(law, lambda var: Delayed(var.name, delay) if var.name in names else var)


def derive_dde(spec: SystemSpec, t0: float = DEFAULT_T0) -> DDESystem:
    """Leitet das DDE-System eines gültigen Modells ab.

    Args:
        spec: Gültige Systemspezifikation
        t0: Startzeit der Integration

    Returns:
        ``DDESystem`` mit Standard-History ``h · l_{S,0}`` für Spezies ohne
        eigene History

    Raises:
        BioPepadError: Wenn das Modell keine Aktionen hat
        StoichiometryError: Bei Doppelrolle einer Spezies
    """
    if not spec.actions:
        raise BioPepadError("Modell ohne Aktionen: kein DDE-System ableitbar")
    matrix = stoichiometry_matrix(spec)
    kinetics = {
        action: delayed_law(spec.kinetic_law(action), spec.species, spec.delays[action])
        for action in spec.actions
    }
    histories: Dict[str, Expr] = {}
    for leaf in iter_leaves(spec.initial_process):
        histories[leaf.name] = spec.histories.get(leaf.name, Num(leaf.level * spec.step_size))
    system = DDESystem(
        variables=spec.species,
        actions=spec.actions,
        stoichiometry=matrix,
        kinetics=kinetics,
        delays={action: spec.delays[action] for action in spec.actions},
        params=dict(spec.params),
        histories=histories,
        t0=t0,
        step_size=spec.step_size,
        custom_histories=tuple(name for name in spec.species if name in spec.histories),
    )
    _LOGGER.info(
        f"DDE-System abgeleitet: {len(system.variables)} Variablen, {len(system.actions)} Aktionen, "
        f"maximale Verzögerung {format_number(system.max_delay)}"
    )
    return system
