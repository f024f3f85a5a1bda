"""
Verzögerte stochastische Simulation (Delay-as-Duration) und Ensembles.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-16
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-16"

# Exports für einfachere Importierung
from .ensemble import EnsembleResult, async_ensemble, ensemble
from .output import ensemble_csv, trajectory_csv, write_csv
from .rng import RNG_ALGORITHMS, RngStream, derive_seed
from .simulator import (
    DelaySimulator,
    PendingEvent,
    SimState,
    SimulationOptions,
    Trajectory,
    TrajectorySample,
    classic_ssa_steps,
    initial_state,
    simulate,
    trajectory_levels_at,
)

__all__ = [
    "EnsembleResult",
    "async_ensemble",
    "ensemble",
    "ensemble_csv",
    "trajectory_csv",
    "write_csv",
    "RNG_ALGORITHMS",
    "RngStream",
    "derive_seed",
    "DelaySimulator",
    "PendingEvent",
    "SimState",
    "SimulationOptions",
    "Trajectory",
    "TrajectorySample",
    "classic_ssa_steps",
    "initial_state",
    "simulate",
    "trajectory_levels_at",
]
