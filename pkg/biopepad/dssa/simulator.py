"""
Verzögerte stochastische Simulation (DSSA) mit Delay-as-Duration.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-16

Reaktanten werden beim Start einer Reaktion entfernt, Produkte nach
``σ(α)`` hinzugefügt. Ausstehende Abschlüsse liegen in einem Min-Heap mit
Schlüssel ``(Abschlusszeit, Sequenznummer)``; die Sequenznummer sorgt für
FIFO bei gleichen Zeiten. Fällt ein Abschluss in das gezogene
Wartezeitfenster, wird die Ziehung verworfen und nach dem Abschluss neu
gerechnet.

Die Startbedingungen (Levelgrenzen, Kapazität der Produkte) sind dieselben
wie in der Startrelation; in Bearbeitung befindliche Produkte zählen bei
der Kapazität mit.

Abhängigkeiten:
  - numpy (Referenz-SSA über der Stöchiometriematrix)
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-16"

import bisect
import heapq
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

import numpy as np

from ..const import (
    CAPACITY_LITERAL,
    DEFAULT_CAPACITY_MODE,
    DEFAULT_RNG_ALGORITHM,
    DEFAULT_T0,
    EVENT_COMPLETE,
    EVENT_GRID,
    EVENT_INITIAL,
    EVENT_START,
)
from ..core.model import RateContextEntry, RoleOp, SystemSpec, iter_leaves
from ..core.rates import eval_rate, evaluate_law
from ..core.stoichiometry import stoichiometry_matrix
from ..exceptions import BioPepadError, SimulationError
from ..semantics.relations import product_capacity_ok
from .rng import RngStream

_LOGGER = logging.getLogger(__name__)

Counts = Tuple[int, ...]


def event_tag(kind: str, action: str) -> str:
    """Ereignis-Tag wie ``start(alpha)``."""
    return f"{kind}({action})"


@dataclass(frozen=True)
class SimulationOptions:
    """Optionen eines Simulationslaufs."""
    t0: float = DEFAULT_T0
    capacity: str = DEFAULT_CAPACITY_MODE
    rng_algorithm: str = DEFAULT_RNG_ALGORITHM
    max_steps: Optional[int] = None


@dataclass(frozen=True)
class PendingEvent:
    """Geplanter Abschluss einer gestarteten Reaktion."""
    completion_time: float
    action: str
    product_additions: Tuple[Tuple[str, int], ...]


@dataclass
class SimState:
    """Zustand eines Laufs: Zeit, Levels und ausstehende Abschlüsse.

    ``in_flight`` hält pro Spezies die Summe der ausstehenden Produkt-κ.
    """
    time: float
    counts: List[int]
    pending: List[Tuple[float, int, PendingEvent]] = field(default_factory=list)
    in_flight: List[int] = field(default_factory=list)
    sequence: int = 0

    @property
    def pending_count(self) -> int:
        return len(self.pending)

    def next_completion(self) -> Optional[float]:
        return self.pending[0][0] if self.pending else None

    def copy(self) -> "SimState":
        return SimState(
            time=self.time,
            counts=list(self.counts),
            pending=list(self.pending),
            in_flight=list(self.in_flight),
            sequence=self.sequence,
        )


@dataclass(frozen=True)
class TrajectorySample:
    time: float
    counts: Counts
    event: str
    pending: int = 0


@dataclass
class Trajectory:
    """Zeitgestempelte Folge von Zuständen eines Laufs."""
    species: Tuple[str, ...]
    samples: List[TrajectorySample] = field(default_factory=list)
    seed: Optional[int] = None
    steps: int = 0

    @property
    def times(self) -> List[float]:
        return [sample.time for sample in self.samples]

    @property
    def final(self) -> TrajectorySample:
        return self.samples[-1]

    def events(self, kind: Optional[str] = None) -> List[str]:
        """Ereignis-Tags ohne den Initialeintrag, optional nach Art gefiltert."""
        tags = [s.event for s in self.samples if s.event not in (EVENT_INITIAL, EVENT_GRID)]
        if kind is None:
            return tags
        return [tag for tag in tags if tag.startswith(f"{kind}(")]


def trajectory_levels_at(trajectory: Trajectory, t: float) -> TrajectorySample:
    """Letzter Zustand zum Zeitpunkt ``t`` oder davor.

    Bei mehreren Einträgen mit gleicher Zeit gilt der letzte.

    Raises:
        ValueError: Wenn ``t`` vor dem Initialzeitpunkt liegt
    """
    times = trajectory.times
    index = bisect.bisect_right(times, t) - 1
    if index < 0:
        raise ValueError(f"Zeitpunkt {t!r} liegt vor dem Start der Trajektorie")
    return trajectory.samples[index]


def grid_times(t0: float, t_end: float, dt: float) -> List[float]:
    """Gitterpunkte ``t0 + i·dt`` bis einschließlich ``t_end``."""
    if dt <= 0:
        raise ValueError(f"Gitterabstand muss positiv sein: {dt!r}")
    count = int(math.floor((t_end - t0) / dt + 1e-9))
    return [t0 + i * dt for i in range(count + 1)]


def resample(trajectory: Trajectory, times: Sequence[float]) -> Trajectory:
    """Tastet eine Trajektorie auf festen Zeitpunkten ab."""
    samples = []
    for t in times:
        sample = trajectory_levels_at(trajectory, t)
        samples.append(TrajectorySample(t, sample.counts, EVENT_GRID, sample.pending))
    return Trajectory(trajectory.species, samples, seed=trajectory.seed, steps=trajectory.steps)


def initial_state(spec: SystemSpec, t0: float = DEFAULT_T0) -> SimState:
    """Startzustand ``X(t0)`` aus den Blättern des initialen Prozesses."""
    counts = [leaf.level for leaf in iter_leaves(spec.initial_process)]
    return SimState(time=t0, counts=counts, in_flight=[0] * len(counts))


@dataclass(frozen=True)
class _ActionPlan:
    action: str
    delay: float
    reactants: Tuple[Tuple[int, int], ...]
    activators: Tuple[Tuple[int, int], ...]
    others: Tuple[int, ...]
    products: Tuple[Tuple[int, int], ...]
    product_additions: Tuple[Tuple[str, int], ...]


class DelaySimulator:
    """DSSA über Level-Zählern eines gültigen Systems."""

    def __init__(self, spec: SystemSpec, capacity: str = DEFAULT_CAPACITY_MODE):
        """Initialisiert den Simulator und kompiliert die Startbedingungen.

        Args:
            spec: Gültige Systemspezifikation
            capacity: Lesart der Produkt-Kapazitätsregel
        """
        self.spec = spec
        self.capacity = capacity
        self._max_levels = [spec.quantities[name].max_level for name in spec.species]
        self._plans = [self._plan(action) for action in spec.actions]
        self._blocked_warned: Set[str] = set()
        self._logger = logging.getLogger(f"{__name__}.DelaySimulator")

    def _plan(self, action: str) -> _ActionPlan:
        index = self.spec.species_index
        reactants, activators, others, products = [], [], [], []
        for name, term in self.spec.participants(action):
            if term.role is RoleOp.REACTANT:
                reactants.append((index[name], term.stoich))
            elif term.role is RoleOp.PRODUCT:
                products.append((index[name], term.stoich))
            elif term.role is RoleOp.ACTIVATOR:
                activators.append((index[name], term.stoich))
            else:
                others.append(index[name])
        return _ActionPlan(
            action=action,
            delay=self.spec.delays[action],
            reactants=tuple(reactants),
            activators=tuple(activators),
            others=tuple(others),
            products=tuple(products),
            product_additions=tuple((self.spec.species[i], k) for i, k in products),
        )

    def _enabled(self, plan: _ActionPlan, state: SimState) -> bool:
        counts = state.counts
        for i, stoich in plan.reactants + plan.activators:
            if not stoich <= counts[i] <= self._max_levels[i]:
                return False
        for i in plan.others:
            if not 1 <= counts[i] <= self._max_levels[i]:
                return False
        for i, stoich in plan.products:
            if not product_capacity_ok(counts[i], state.in_flight[i], stoich, self._max_levels[i], self.capacity):
                if plan.action not in self._blocked_warned:
                    self._blocked_warned.add(plan.action)
                    self._logger.warning(
                        f"Aktion '{plan.action}' durch Kapazität von '{self.spec.species[i]}' blockiert (t={state.time!r})"
                    )
                return False
        return True

    def propensities(self, state: SimState) -> List[float]:
        """Propensität pro Aktion in ``spec.actions``-Reihenfolge.

        Raises:
            RateEvaluationError: Bei nicht auswertbarer Rate
        """
        h = self.spec.step_size
        env: Dict[str, float] = dict(self.spec.params)
        for name, count in zip(self.spec.species, state.counts):
            env[name] = count * h
        return [
            evaluate_law(plan.action, env, self.spec) if self._enabled(plan, state) else 0.0
            for plan in self._plans
        ]

    def step(
        self,
        state: SimState,
        rng: RngStream,
        horizon: float = math.inf,
    ) -> Tuple[SimState, Tuple[Tuple[str, Counts], ...]]:
        """Führt einen DSSA-Schritt aus.

        Der Zustand wird an Ort und Stelle fortgeschrieben.

        Args:
            state: Aktueller Zustand
            rng: Zufallsstrom
            horizon: Ereignisse nach diesem Zeitpunkt werden nicht angewendet

        Returns:
            Tupel aus Zustand und den Ereignissen ``(tag, counts)``; leer bei
            Ruhe (keine Propensität, nichts ausstehend) oder am Horizont
        """
        propensities = self.propensities(state)
        a0 = sum(propensities)
        if a0 == 0.0 and not state.pending:
            return state, ()

        tau = rng.exponential(a0)
        next_completion = state.next_completion()
        if next_completion is not None and next_completion <= state.time + tau:
            if next_completion > horizon:
                return state, ()
            _, _, event = heapq.heappop(state.pending)
            state.time = next_completion
            index = self.spec.species_index
            for name, stoich in event.product_additions:
                state.counts[index[name]] += stoich
                state.in_flight[index[name]] -= stoich
            self._check_bounds(state, event.action)
            return state, ((event_tag(EVENT_COMPLETE, event.action), tuple(state.counts)),)

        time = state.time + tau
        if time > horizon:
            return state, ()
        plan = self._plans[self._select(propensities, a0, rng)]
        state.time = time
        for i, stoich in plan.reactants:
            state.counts[i] -= stoich
        started = (event_tag(EVENT_START, plan.action), tuple(state.counts))
        if plan.delay == 0.0:
            for i, stoich in plan.products:
                state.counts[i] += stoich
            self._check_bounds(state, plan.action)
            return state, (started, (event_tag(EVENT_COMPLETE, plan.action), tuple(state.counts)))

        for i, stoich in plan.products:
            state.in_flight[i] += stoich
        event = PendingEvent(time + plan.delay, plan.action, plan.product_additions)
        heapq.heappush(state.pending, (event.completion_time, state.sequence, event))
        state.sequence += 1
        self._check_bounds(state, plan.action)
        return state, (started,)

    def _select(self, propensities: Sequence[float], a0: float, rng: RngStream) -> int:
        threshold = rng.uniform() * a0
        cumulative = 0.0
        last_positive = 0
        for index, value in enumerate(propensities):
            if value <= 0.0:
                continue
            last_positive = index
            cumulative += value
            if cumulative > threshold:
                return index
        return last_positive

    def _check_bounds(self, state: SimState, action: str) -> None:
        for name, count, max_level in zip(self.spec.species, state.counts, self._max_levels):
            if count < 0:
                raise SimulationError(f"Unterlauf von '{name}' nach '{action}'", time=state.time)
            if count > max_level and self.capacity != CAPACITY_LITERAL:
                raise SimulationError(f"Überlauf von '{name}' nach '{action}'", time=state.time)

    def run(self, t_end: float, rng: RngStream, options: SimulationOptions = SimulationOptions()) -> Trajectory:
        """Simuliert bis ``t_end`` und zeichnet alle Ereignisse auf.

        Raises:
            SimulationError: Mit Schrittindex und Zeit des Fehlers
        """
        state = initial_state(self.spec, options.t0)
        trajectory = Trajectory(self.spec.species, seed=rng.seed)
        trajectory.samples.append(TrajectorySample(state.time, tuple(state.counts), EVENT_INITIAL, 0))
        steps = 0
        while options.max_steps is None or steps < options.max_steps:
            try:
                state, events = self.step(state, rng, horizon=t_end)
            except SimulationError as err:
                raise SimulationError(err.message, step_index=steps, time=state.time) from err
            except BioPepadError as err:
                raise SimulationError(str(err), step_index=steps, time=state.time) from err
            if not events:
                break
            steps += 1
            for tag, counts in events:
                trajectory.samples.append(TrajectorySample(state.time, counts, tag, state.pending_count))
        trajectory.steps = steps
        self._logger.debug(
            f"Lauf beendet: {steps} Schritte, t={state.time!r}, ausstehend={state.pending_count}"
        )
        return trajectory


def simulate(
    spec: SystemSpec,
    t_end: float,
    seed: int,
    grid: Optional[float] = None,
    options: SimulationOptions = SimulationOptions(),
) -> Trajectory:
    """Simuliert eine Trajektorie.

    Args:
        spec: Gültige Systemspezifikation
        t_end: Endzeit (``>= t0``)
        seed: Seed des Zufallsstroms
        grid: Gitterabstand; ``None`` zeichnet jedes Ereignis auf
        options: Startzeit, Kapazitätsmodus, RNG-Algorithmus

    Returns:
        Trajektorie, deterministisch für festen Seed

    Raises:
        ValueError: Wenn ``t_end < t0``
        SimulationError: Bei fehlgeschlagenem Schritt
    """
    if t_end < options.t0:
        raise ValueError(f"Endzeit {t_end!r} liegt vor der Startzeit {options.t0!r}")
    rng = RngStream(seed, options.rng_algorithm)
    trajectory = DelaySimulator(spec, options.capacity).run(t_end, rng, options)
    if grid is None:
        return trajectory
    return resample(trajectory, grid_times(options.t0, t_end, grid))


def _classic_enabled(role: RoleOp, level: int, stoich: int, max_level: int, capacity: str) -> bool:
    if role is RoleOp.PRODUCT:
        return product_capacity_ok(level, 0, stoich, max_level, capacity)
    if role.is_rate_input:
        return stoich <= level <= max_level
    return 1 <= level <= max_level


def classic_ssa_steps(
    spec: SystemSpec,
    rng: RngStream,
    steps: int,
    capacity: str = DEFAULT_CAPACITY_MODE,
) -> List[Tuple[str, float]]:
    """Referenz-SSA ohne Verzögerungen über der Stöchiometriematrix.

    Zieht wie der DSSA zuerst die Wartezeit, dann die Reaktion. Eine Reaktion
    ist nur möglich, wenn alle Teilnehmer die Levelgrenzen der Startrelation
    einhalten; ohne ausstehende Abschlüsse ist die Kapazität der Produkte
    ``l + κ ≤ N``.

    Returns:
        Folge von ``(Aktion, Wartezeit)``; endet früher, wenn keine Reaktion möglich ist
    """
    matrix = stoichiometry_matrix(spec)
    counts = np.array([leaf.level for leaf in iter_leaves(spec.initial_process)], dtype=np.int64)
    index = spec.species_index
    result: List[Tuple[str, float]] = []
    for _ in range(steps):
        propensities = []
        for action in spec.actions:
            ctx = []
            enabled = True
            for name, term in spec.participants(action):
                level = int(counts[index[name]])
                max_level = spec.quantities[name].max_level
                enabled = enabled and _classic_enabled(term.role, level, term.stoich, max_level, capacity)
                ctx.append(RateContextEntry(name, term.role, level, term.stoich))
            propensities.append(eval_rate(action, tuple(ctx), spec) if enabled else 0.0)
        a0 = sum(propensities)
        if a0 == 0.0:
            break
        tau = rng.exponential(a0)
        threshold = rng.uniform() * a0
        cumulative = 0.0
        chosen = None
        for position, value in enumerate(propensities):
            if value <= 0.0:
                continue
            chosen = position
            cumulative += value
            if cumulative > threshold:
                break
        counts += matrix.array[:, chosen]
        result.append((spec.actions[chosen], tau))
    return result
