"""
Fehlerhierarchie des Bio-PEPAd Toolkits.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-12

Abhängigkeiten:
  - typing
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-12"

from typing import Any, List, Optional, Sequence


class BioPepadError(Exception):
    """Basisklasse aller Fehler des Toolkits."""


class ModelValidationError(BioPepadError):
    """Ein Modell verletzt mindestens eine Invariante."""

    def __init__(self, violations: Sequence[Any]):
        """Initialisiert den Fehler.

        Args:
            violations: Liste der gefundenen Verletzungen
        """
        self.violations = list(violations)
        details = "; ".join(str(v) for v in self.violations)
        super().__init__(f"Modell ist ungültig ({len(self.violations)} Verletzungen): {details}")


class ModelParseError(BioPepadError):
    """Der Modelltext konnte nicht gelesen werden."""

    def __init__(self, diagnostics: Sequence[Any]):
        self.diagnostics = list(diagnostics)
        details = "; ".join(str(d) for d in self.diagnostics)
        super().__init__(f"Modelltext fehlerhaft: {details}")


class StoichiometryError(BioPepadError):
    """Eine Spezies nimmt an einer Aktion in zwei Rollen teil."""

    def __init__(self, species: str, action: str):
        self.species = species
        self.action = action
        super().__init__(
            f"Spezies '{species}' ist für Aktion '{action}' zugleich Reaktant und Produkt"
        )


class RateEvaluationError(BioPepadError):
    """Die funktionale Rate einer Aktion ist nicht auswertbar."""

    def __init__(self, action: str, reason: str):
        self.action = action
        self.reason = reason
        super().__init__(f"Rate von Aktion '{action}' nicht auswertbar: {reason}")


class CorruptConfigurationError(BioPepadError):
    """Eine Konfiguration hat einen inkonsistenten Pending-Zustand."""

    def __init__(self, action: str, message: str):
        self.action = action
        super().__init__(f"Korrupte Konfiguration für Aktion '{action}': {message}")


class ExplorationLimitError(BioPepadError):
    """Die Exploration hat ein Limit erreicht (nur im strikten Modus)."""

    def __init__(self, reason: str, action: Optional[str] = None):
        self.reason = reason
        self.action = action
        suffix = f" (Aktion '{action}')" if action else ""
        super().__init__(f"Exploration abgebrochen: {reason}{suffix}")


class SimulationError(BioPepadError):
    """Ein Simulationsschritt ist fehlgeschlagen."""

    def __init__(
        self,
        message: str,
        step_index: Optional[int] = None,
        time: Optional[float] = None,
        run_index: Optional[int] = None,
        seed: Optional[int] = None,
    ):
        self.message = message
        self.step_index = step_index
        self.time = time
        self.run_index = run_index
        self.seed = seed
        parts: List[str] = []
        if run_index is not None:
            parts.append(f"Lauf={run_index}")
        if seed is not None:
            parts.append(f"Seed={seed}")
        if step_index is not None:
            parts.append(f"Schritt={step_index}")
        if time is not None:
            parts.append(f"t={time!r}")
        where = f" [{', '.join(parts)}]" if parts else ""
        super().__init__(f"{message}{where}")

    def __reduce__(self):
        # Prozess-Pools übertragen Fehler per pickle
        return (
            SimulationError,
            (self.message, self.step_index, self.time, self.run_index, self.seed),
        )

    def with_run(self, run_index: int, seed: int) -> "SimulationError":
        """Gibt eine Kopie mit Lauf-Informationen zurück."""
        return SimulationError(
            self.message,
            step_index=self.step_index,
            time=self.time,
            run_index=run_index,
            seed=seed,
        )


class IntegrationError(BioPepadError):
    """Der DDE-Integrator hat einen nicht-endlichen Zustand erreicht."""

    def __init__(self, time: float, message: str = "nicht-endlicher Zustand"):
        self.time = time
        super().__init__(f"{message} bei t={time!r}")


class StepSizeError(BioPepadError):
    """Für die Verzögerungen existiert keine kompatible Schrittweite."""
