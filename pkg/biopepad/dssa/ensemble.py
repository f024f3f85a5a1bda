"""
Ensemble-Simulation mit unabhängigen Zufallsströmen.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-16

Lauf ``i`` verwendet den Seed ``derive_seed(base_seed, i)``. Alle Läufe
werden auf ein festes Gitter abgetastet (letzter Wert zum Zeitpunkt oder
davor) und in Laufreihenfolge aggregiert, damit das Ergebnis unabhängig von
der Anzahl paralleler Prozesse ist.

Abhängigkeiten:
  - numpy
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-16"

import asyncio
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..core.model import SystemSpec
from ..exceptions import SimulationError
from ..utils.logging import get_context_logger
from .rng import derive_seed
from .simulator import SimulationOptions, grid_times, simulate

_LOGGER = logging.getLogger(__name__)

# Läufe pro Auftrag an den Prozess-Pool
RUNS_PER_TASK = 64


@dataclass
class EnsembleResult:
    """Mittelwert und Varianz der Levels pro Gitterpunkt.

    Attributes:
        times: Gitterpunkte
        species: Spezies in Spaltenreihenfolge
        mean: Mittelwerte, Form ``(len(times), len(species))``
        var: Stichprobenvarianzen (``ddof=1``; 0 bei einem Lauf)
        pending_mean: Mittlere Anzahl ausstehender Abschlüsse pro Gitterpunkt
        runs: Anzahl der Läufe
        base_seed: Basis-Seed
    """
    times: np.ndarray
    species: Tuple[str, ...]
    mean: np.ndarray
    var: np.ndarray
    pending_mean: np.ndarray
    runs: int
    base_seed: int

    def column(self, species: str) -> np.ndarray:
        return self.mean[:, self.species.index(species)]


def _run_on_grid(
    spec: SystemSpec,
    t_end: float,
    grid_dt: float,
    run_index: int,
    base_seed: int,
    options: SimulationOptions,
) -> np.ndarray:
    seed = derive_seed(base_seed, run_index)
    logger = get_context_logger(__name__, run=run_index, seed=seed)
    try:
        trajectory = simulate(spec, t_end, seed, grid=grid_dt, options=options)
    except SimulationError as err:
        logger.error(f"Lauf fehlgeschlagen: {err.message}")
        raise err.with_run(run_index, seed) from err
    logger.debug(f"Lauf abgeschlossen nach {trajectory.steps} Schritten")
    return np.array(
        [list(sample.counts) + [sample.pending] for sample in trajectory.samples],
        dtype=np.float64,
    )


def _run_chunk(
    spec: SystemSpec,
    t_end: float,
    grid_dt: float,
    run_indices: Sequence[int],
    base_seed: int,
    options: SimulationOptions,
) -> List[np.ndarray]:
    return [_run_on_grid(spec, t_end, grid_dt, i, base_seed, options) for i in run_indices]


def _aggregate(
    spec: SystemSpec,
    t_end: float,
    grid_dt: float,
    runs: Sequence[np.ndarray],
    base_seed: int,
    options: SimulationOptions,
) -> EnsembleResult:
    stacked = np.stack(runs)
    values = stacked[:, :, :-1]
    var = values.var(axis=0, ddof=1) if len(runs) > 1 else np.zeros(values.shape[1:])
    return EnsembleResult(
        times=np.array(grid_times(options.t0, t_end, grid_dt)),
        species=spec.species,
        mean=values.mean(axis=0),
        var=var,
        pending_mean=stacked[:, :, -1].mean(axis=0),
        runs=len(runs),
        base_seed=base_seed,
    )


def _check_runs(runs: int) -> None:
    if runs < 1:
        raise ValueError(f"Mindestens ein Lauf erforderlich, erhalten: {runs}")


async def async_ensemble(
    spec: SystemSpec,
    t_end: float,
    runs: int,
    base_seed: int,
    grid_dt: float,
    jobs: Optional[int] = None,
    options: SimulationOptions = SimulationOptions(),
) -> EnsembleResult:
    """Führt ein Ensemble asynchron über einen Prozess-Pool aus.

    Args:
        spec: Gültige Systemspezifikation
        t_end: Endzeit jedes Laufs
        runs: Anzahl der Läufe (``>= 1``)
        base_seed: Basis-Seed für die Ableitung der Lauf-Seeds
        grid_dt: Gitterabstand der Aggregation
        jobs: Anzahl paralleler Prozesse (``None``: alle Kerne; 1: im Prozess)
        options: Simulationsoptionen

    Returns:
        Aggregiertes ``EnsembleResult``

    Raises:
        SimulationError: Mit Lauf-Index und Seed des fehlgeschlagenen Laufs
    """
    _check_runs(runs)
    jobs = jobs or os.cpu_count() or 1
    indices = list(range(runs))
    if jobs == 1:
        results = _run_chunk(spec, t_end, grid_dt, indices, base_seed, options)
    else:
        chunks = [indices[i:i + RUNS_PER_TASK] for i in range(0, runs, RUNS_PER_TASK)]
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            tasks = [
                loop.run_in_executor(pool, _run_chunk, spec, t_end, grid_dt, chunk, base_seed, options)
                for chunk in chunks
            ]
            chunk_results = await asyncio.gather(*tasks)
        results = [array for chunk in chunk_results for array in chunk]
    _LOGGER.info(f"Ensemble abgeschlossen: {runs} Läufe, Basis-Seed {base_seed}, {jobs} Prozesse")
    return _aggregate(spec, t_end, grid_dt, results, base_seed, options)


def ensemble(
    spec: SystemSpec,
    t_end: float,
    runs: int,
    base_seed: int,
    grid_dt: float,
    jobs: Optional[int] = 1,
    options: SimulationOptions = SimulationOptions(),
) -> EnsembleResult:
    """Synchrone Variante von ``async_ensemble``."""
    _check_runs(runs)
    if jobs == 1:
        results = _run_chunk(spec, t_end, grid_dt, range(runs), base_seed, options)
        _LOGGER.info(f"Ensemble abgeschlossen: {runs} Läufe, Basis-Seed {base_seed}")
        return _aggregate(spec, t_end, grid_dt, results, base_seed, options)
    return asyncio.run(async_ensemble(spec, t_end, runs, base_seed, grid_dt, jobs, options))
