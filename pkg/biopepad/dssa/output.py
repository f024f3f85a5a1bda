"""
CSV-Ausgabe für Trajektorien und Ensembles.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-16

Reelle Zahlen werden mit ``repr`` geschrieben (verlustfreie Rundreise).
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-16"

import csv
import io
import logging
from pathlib import Path
from typing import Union

from .ensemble import EnsembleResult
from .simulator import Trajectory

_LOGGER = logging.getLogger(__name__)


def _real(value: float) -> str:
    return repr(float(value))


def trajectory_csv(trajectory: Trajectory) -> str:
    """Trajektorie als CSV ``time,event,<species...>``."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["time", "event", *trajectory.species])
    for sample in trajectory.samples:
        writer.writerow([_real(sample.time), sample.event, *sample.counts])
    return buffer.getvalue()


def ensemble_csv(result: EnsembleResult) -> str:
    """Ensemble als CSV ``time,<S>_mean,<S>_var,...,pending_mean``."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    header = ["time"]
    for name in result.species:
        header += [f"{name}_mean", f"{name}_var"]
    header.append("pending_mean")
    writer.writerow(header)
    for row, t in enumerate(result.times):
        values = [_real(t)]
        for column in range(len(result.species)):
            values += [_real(result.mean[row, column]), _real(result.var[row, column])]
        values.append(_real(result.pending_mean[row]))
        writer.writerow(values)
    return buffer.getvalue()


def write_csv(content: str, path: Union[str, Path]) -> Path:
    """Schreibt CSV-Inhalt und gibt den Pfad zurück."""
    path = Path(path)
    path.write_text(content, encoding="utf-8")
    _LOGGER.info(f"CSV geschrieben: {path}")
    return path
