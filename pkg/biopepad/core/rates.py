"""
Auswertung funktionaler Raten: ``r_α[w, 𝒩, 𝒦] = f_α[w, 𝒩, 𝒦] / h``.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-13

Abhängigkeiten:
  - math
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-13"

import logging
import math
from typing import Dict, Mapping

from ..exceptions import RateEvaluationError
from .model import RateContext, SystemSpec

_LOGGER = logging.getLogger(__name__)


def rate_environment(ctx: RateContext, spec: SystemSpec) -> Dict[str, float]:
    """Baut die Auswertungsumgebung: Parameter plus Konzentrationen ``l · h``."""
    env: Dict[str, float] = dict(spec.params)
    for entry in ctx:
        env[entry.species] = entry.level * spec.step_size
    return env


def evaluate_law(action: str, env: Mapping[str, float], spec: SystemSpec) -> float:
    """Wertet das kompilierte Gesetz einer Aktion aus und teilt durch ``h``.

    Args:
        action: Aktionsname
        env: Parameter und Konzentrationen
        spec: Systemspezifikation

    Returns:
        Nicht-negative Rate; 0.0 für nicht feuernde Kontexte

    Raises:
        RateEvaluationError: Bei fehlender Bindung, negativer oder nicht-endlicher Rate
    """
    law = spec.compiled_rate_laws.get(action)
    if law is None:
        raise RateEvaluationError(action, "keine Rate definiert")
    try:
        value = law(env) / spec.step_size
    except KeyError as err:
        raise RateEvaluationError(action, f"fehlende Bindung für {err.args[0]!r}") from err
    except (ArithmeticError, ValueError) as err:
        raise RateEvaluationError(action, str(err)) from err

    if not math.isfinite(value):
        raise RateEvaluationError(action, f"nicht-endliche Rate {value!r}")
    if value < 0:
        raise RateEvaluationError(action, f"negative Rate {value!r}")
    return float(value)


def eval_rate(action: str, ctx: RateContext, spec: SystemSpec) -> float:
    """Berechnet die stochastische Rate einer Aktion in einem Kontext.

    Jede Speziesvariable wird an ``level · h`` gebunden, jeder Parameter an
    seinen Wert aus ``spec.params``. Massenwirkung ``MA(k)`` ergibt
    ``k · Π x_S^κ / h`` über Reaktanten und Aktivatoren.

    Args:
        action: Aktionsname
        ctx: Ratenkontext mit allen teilnehmenden Spezies
        spec: Systemspezifikation

    Returns:
        Rate; 0.0 kennzeichnet einen nicht feuernden Kontext

    Raises:
        RateEvaluationError: Bei fehlender Bindung, negativer oder nicht-endlicher Rate
    """
    return evaluate_law(action, rate_environment(ctx, spec), spec)
