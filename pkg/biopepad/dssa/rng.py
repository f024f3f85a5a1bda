"""
Seedbare Zufallszahlenströme für die Simulation.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-15

Standard ist der zählerbasierte Philox-Generator von numpy. Gleicher
(Algorithmus, Seed) liefert dieselbe Folge. Ensemble-Läufe erhalten
unabhängige Ströme über ``SeedSequence(base_seed, spawn_key=(index,))``.

Abhängigkeiten:
  - numpy
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-15"

import math

import numpy as np

from ..const import DEFAULT_RNG_ALGORITHM

SEED_MASK = (1 << 64) - 1

_BIT_GENERATORS = {
    "philox": np.random.Philox,
    "pcg64": np.random.PCG64,
}

RNG_ALGORITHMS = sorted(_BIT_GENERATORS)


def derive_seed(base_seed: int, run_index: int) -> int:
    """Leitet den 64-Bit-Seed eines Ensemble-Laufs ab.

    Args:
        base_seed: Basis-Seed des Ensembles
        run_index: Index des Laufs (ab 0)

    Returns:
        Seed für ``RngStream``
    """
    sequence = np.random.SeedSequence(base_seed & SEED_MASK, spawn_key=(run_index,))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


class RngStream:
    """Benannter, seedbarer Strom gleichverteilter Zahlen mit Ziehungszähler."""

    def __init__(self, seed: int, algorithm: str = DEFAULT_RNG_ALGORITHM):
        """Initialisiert den Strom.

        Args:
            seed: 64-Bit-Seed (negative Werte werden modulo 2^64 genommen)
            algorithm: ``philox`` oder ``pcg64``

        Raises:
            ValueError: Bei unbekanntem Algorithmus
        """
        if algorithm not in _BIT_GENERATORS:
            raise ValueError(f"Unbekannter RNG-Algorithmus: {algorithm}")
        self.algorithm = algorithm
        self.seed = int(seed) & SEED_MASK
        self.counter = 0
        self._generator = np.random.Generator(_BIT_GENERATORS[algorithm](self.seed))

    def uniform(self) -> float:
        """Zieht ``u`` gleichverteilt aus ``[0, 1)``."""
        self.counter += 1
        return float(self._generator.random())

    def exponential(self, rate: float) -> float:
        """Exponentialverteilte Wartezeit per Inversionsmethode.

        Bei ``rate <= 0`` wird nicht gezogen und ``inf`` zurückgegeben.
        """
        if rate <= 0.0:
            return math.inf
        return -math.log1p(-self.uniform()) / rate

    def __repr__(self) -> str:
        return f"RngStream(algorithm={self.algorithm!r}, seed={self.seed}, counter={self.counter})"
