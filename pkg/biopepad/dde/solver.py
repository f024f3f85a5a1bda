"""
Method-of-Steps-Integration des DDE-Systems.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-19

Klassisches Runge-Kutta-Verfahren vierter Ordnung mit fester Schrittweite.
Die Schrittweite wird so verkleinert, dass sie jede Verzögerung teilt;
Unstetigkeiten bei ``t0 + k·σ`` liegen dadurch auf Gitterpunkten.
Verzögerte Werte im Lösungsbereich werden per kubischer
Hermite-Interpolation aus gespeicherten Werten und Ableitungen gewonnen,
im History-Bereich direkt aus der History-Funktion.

Abhängigkeiten:
  - numpy
  - scipy (CubicHermiteSpline)
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-19"

import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.interpolate import CubicHermiteSpline

from ..const import DELAY_GRID_TOLERANCE, MAX_STEP_REFINEMENT, TIME_VARIABLE
from ..core.expressions import BinOp, Delayed, Expr, Neg, compile_expr, format_number
from ..exceptions import IntegrationError, StepSizeError
from .derive import DDESystem

_LOGGER = logging.getLogger(__name__)

SEGMENT_HISTORY = "history"
SEGMENT_SOLUTION = "solution"

HistoryFunction = Callable[[float], np.ndarray]


@dataclass
class SolutionGrid:
    """Lösung auf gleichmäßigem Gitter einschließlich History-Segment.

    Attributes:
        variables: Spezies in Spaltenreihenfolge
        times: Gitterzeiten ab ``t0 - maxDelay``
        values: Werte, Form ``(len(times), len(variables))``
        segments: ``history`` für Zeiten vor ``t0``, sonst ``solution``
        step: Verwendete Schrittweite
    """
    variables: Tuple[str, ...]
    times: np.ndarray
    values: np.ndarray
    segments: List[str]
    step: float

    def column(self, species: str) -> np.ndarray:
        return self.values[:, self.variables.index(species)]

    def index_of(self, t: float) -> int:
        """Index des Gitterpunkts zur Zeit ``t``.

        Raises:
            ValueError: Wenn ``t`` kein Gitterpunkt ist
        """
        position = (t - self.times[0]) / self.step
        index = int(round(position))
        if abs(position - index) > 1e-6 or not 0 <= index < len(self.times):
            raise ValueError(f"Zeit {t!r} liegt nicht auf dem Lösungsgitter")
        return index

    def value_at(self, t: float, species: str) -> float:
        return float(self.values[self.index_of(t), self.variables.index(species)])

    @property
    def final(self) -> np.ndarray:
        return self.values[-1]


def compatible_step(step: float, delays: Sequence[float], tolerance: float = DELAY_GRID_TOLERANCE) -> float:
    """Größte Schrittweite ``<= step``, die jede positive Verzögerung teilt.

    Args:
        step: Gewünschte Schrittweite
        delays: Verzögerungen der Aktionen
        tolerance: Toleranz für die Ganzzahligkeit ``σ / h``

    Returns:
        Kompatible Schrittweite ``σ_min / n``

    Raises:
        StepSizeError: Bei nicht-positiver Schrittweite oder wenn keine
            kompatible Schrittweite gefunden wird
    """
    if not step > 0 or not math.isfinite(step):
        raise StepSizeError(f"Schrittweite muss positiv und endlich sein: {step!r}")
    positive = sorted({d for d in delays if d > 0})
    if not positive:
        return step
    smallest = positive[0]
    first = max(1, math.ceil(smallest / step - tolerance))
    for divisions in range(first, first + MAX_STEP_REFINEMENT):
        candidate = smallest / divisions
        ratios = [d / candidate for d in positive]
        if all(abs(r - round(r)) <= tolerance * max(1.0, r) for r in ratios):
            return candidate
    raise StepSizeError(
        f"Keine gemeinsame Schrittweite für die Verzögerungen {[format_number(d) for d in positive]}"
    )


class MethodOfStepsSolver:
    """RK4-Integrator für ein ``DDESystem`` mit konstanten Verzögerungen."""

    def __init__(self, system: DDESystem, history: Optional[HistoryFunction] = None):
        """Initialisiert den Solver.

        Args:
            system: Abgeleitetes DDE-System
            history: Optionale History-Funktion ``t -> Vektor``; ersetzt die
                History-Ausdrücke des Systems
        """
        self.system = system
        self._logger = logging.getLogger(f"{__name__}.MethodOfStepsSolver")
        self._laws = [compile_expr(system.kinetics[action]) for action in system.actions]
        self._lags = sorted(
            {
                (node.name, node.delay)
                for action in system.actions
                for node in _delayed_nodes(system.kinetics[action])
            }
        )
        self._matrix = np.asarray(system.stoichiometry.array, dtype=np.float64)
        self._custom_history = history is not None
        self._history = history or self._history_from_expressions()
        self._times: List[float] = []
        self._values: List[np.ndarray] = []
        self._derivatives: List[np.ndarray] = []
        # Interpolanten je Intervall [t_n, t_{n+1}], gültig für einen Lauf von solve()
        self._splines: Dict[int, CubicHermiteSpline] = {}

    def _history_from_expressions(self) -> HistoryFunction:
        compiled = [compile_expr(self.system.histories[name]) for name in self.system.variables]
        params = dict(self.system.params)

        def history(t: float) -> np.ndarray:
            env = dict(params)
            env[TIME_VARIABLE] = t
            return np.array([law(env) for law in compiled], dtype=np.float64)

        return history

    def _initial_values(self) -> np.ndarray:
        if self._custom_history:
            return np.asarray(self._history(self.system.t0), dtype=np.float64)
        initial = self.system.initial_values()
        return np.array([initial[name] for name in self.system.variables], dtype=np.float64)

    def _lagged(self, s: float, step: float) -> np.ndarray:
        t0 = self.system.t0
        if s <= t0 + DELAY_GRID_TOLERANCE * step:
            return self._history(s)
        position = (s - t0) / step
        nearest = int(round(position))
        if abs(position - nearest) <= DELAY_GRID_TOLERANCE:
            return self._values[nearest]
        left = int(math.floor(position))
        spline = self._splines.get(left)
        if spline is None:
            spline = CubicHermiteSpline(
                [self._times[left], self._times[left + 1]],
                [self._values[left], self._values[left + 1]],
                [self._derivatives[left], self._derivatives[left + 1]],
                axis=0,
            )
            self._splines[left] = spline
        return spline(s)

    def rhs(self, t: float, y: np.ndarray, step: float) -> np.ndarray:
        """Rechte Seite ``D × ν(t)`` am Zustand ``y``.

        Raises:
            IntegrationError: Bei nicht auswertbarem kinetischem Gesetz
        """
        variables = self.system.variables
        env: Dict = dict(self.system.params)
        for index, name in enumerate(variables):
            env[name] = y[index]
        lagged: Dict[float, np.ndarray] = {}
        for name, delay in self._lags:
            if delay not in lagged:
                lagged[delay] = self._lagged(t - delay, step)
            env[(name, delay)] = lagged[delay][variables.index(name)]
        try:
            nu = np.array([law(env) for law in self._laws], dtype=np.float64)
        except (ArithmeticError, ValueError, KeyError) as err:
            raise IntegrationError(t, f"kinetisches Gesetz nicht auswertbar ({err})") from err
        return self._matrix @ nu

    def solve(self, t_end: float, step: float) -> SolutionGrid:
        """Integriert von ``t0`` bis ``t_end``.

        Raises:
            ValueError: Wenn ``t_end < t0``
            StepSizeError: Wenn keine kompatible Schrittweite existiert
            IntegrationError: Bei nicht-endlichem Zustand
        """
        system = self.system
        t0 = system.t0
        if t_end < t0:
            raise ValueError(f"Endzeit {t_end!r} liegt vor der Startzeit {t0!r}")
        h = compatible_step(step, system.delays.values())
        if h != step:
            self._logger.info(f"Schrittweite angepasst: {format_number(step)} -> {format_number(h)}")

        history_points = int(round(system.max_delay / h))
        history_times = [t0 - m * h for m in range(history_points, 0, -1)]
        span = (t_end - t0) / h
        steps = int(round(span)) if abs(span - round(span)) <= DELAY_GRID_TOLERANCE else math.ceil(span)

        self._times = [t0]
        self._values = [self._initial_values()]
        self._derivatives = []
        self._splines = {}
        for n in range(steps):
            t = self._times[n]
            y = self._values[n]
            k1 = self.rhs(t, y, h)
            self._derivatives.append(k1)
            k2 = self.rhs(t + h / 2, y + h / 2 * k1, h)
            k3 = self.rhs(t + h / 2, y + h / 2 * k2, h)
            k4 = self.rhs(t + h, y + h * k3, h)
            y_next = y + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
            t_next = t0 + (n + 1) * h
            if not np.all(np.isfinite(y_next)):
                raise IntegrationError(t_next)
            self._times.append(t_next)
            self._values.append(y_next)

        history_values = [np.asarray(self._history(s), dtype=np.float64) for s in history_times]
        times = np.array(history_times + self._times)
        values = np.vstack(history_values + self._values) if history_values else np.vstack(self._values)
        segments = [SEGMENT_HISTORY] * len(history_times) + [SEGMENT_SOLUTION] * len(self._times)
        self._logger.info(f"DDE integriert: {steps} Schritte mit h={format_number(h)} bis t={format_number(self._times[-1])}")
        return SolutionGrid(system.variables, times, values, segments, h)


def _delayed_nodes(expr: Expr) -> List[Delayed]:
    if isinstance(expr, Delayed):
        return [expr]
    if isinstance(expr, Neg):
        return _delayed_nodes(expr.operand)
    if isinstance(expr, BinOp):
        return _delayed_nodes(expr.left) + _delayed_nodes(expr.right)
    return []


def solve_dde(
    system: DDESystem,
    t_end: float,
    step: float,
    history: Optional[HistoryFunction] = None,
) -> SolutionGrid:
    """Löst ein DDE-System mit RK4 und Hermite-Interpolation.

    Args:
        system: Abgeleitetes DDE-System
        t_end: Endzeit
        step: Gewünschte Schrittweite; wird bei Bedarf auf die größte
            kompatible Schrittweite verkleinert
        history: Optionale History-Funktion statt der Systemausdrücke

    Returns:
        ``SolutionGrid`` über ``[t0 - maxDelay, t_end]``
    """
    return MethodOfStepsSolver(system, history).solve(t_end, step)
