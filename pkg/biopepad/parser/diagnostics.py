"""
Quelltexte und Diagnosen des Modellparsers.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-14

Diagnosemeldungen sind für Modellautoren bestimmt und deshalb englisch.

Abhängigkeiten:
  - pyparsing (Zeilen-/Spaltenberechnung)
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-14"

import enum
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Union

import pyparsing as pp

from ..core.model import SystemSpec

INLINE_ORIGIN = "<inline>"


class Severity(enum.Enum):
    """Schweregrad einer Diagnose."""
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class ModelSource:
    """Modelltext mit Herkunftsangabe (Dateipfad oder Inline-Tag)."""
    text: str
    origin: str = INLINE_ORIGIN

    @classmethod
    def from_path(cls, path: Union[str, Path]) -> "ModelSource":
        """Liest eine Modelldatei als UTF-8.

        Raises:
            OSError: Wenn die Datei nicht gelesen werden kann
            UnicodeDecodeError: Wenn der Inhalt kein gültiges UTF-8 ist
        """
        path = Path(path)
        return cls(text=path.read_bytes().decode("utf-8"), origin=str(path))


@dataclass(frozen=True)
class ParseDiagnostic:
    """Fehler oder Warnung mit Position (1-basiert)."""
    line: int
    column: int
    message: str
    severity: Severity = Severity.ERROR
    origin: str = INLINE_ORIGIN

    @classmethod
    def at(
        cls,
        text: str,
        offset: int,
        message: str,
        severity: Severity = Severity.ERROR,
        origin: str = INLINE_ORIGIN,
    ) -> "ParseDiagnostic":
        """Erstellt eine Diagnose aus einem Zeichenoffset im Quelltext."""
        offset = max(0, min(offset, len(text)))
        return cls(
            line=pp.lineno(offset, text),
            column=max(1, pp.col(offset, text)),
            message=message,
            severity=severity,
            origin=origin,
        )

    @property
    def is_error(self) -> bool:
        return self.severity is Severity.ERROR

    def __str__(self) -> str:
        return f"{self.origin}:{self.line}:{self.column}: {self.severity.value}: {self.message}"


@dataclass
class ParseResult:
    """Ergebnis von ``parse_model``: Spezifikation oder Diagnosen."""
    spec: Optional[SystemSpec]
    diagnostics: List[ParseDiagnostic] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.spec is not None

    @property
    def errors(self) -> List[ParseDiagnostic]:
        return [d for d in self.diagnostics if d.is_error]

    @property
    def warnings(self) -> List[ParseDiagnostic]:
        return [d for d in self.diagnostics if not d.is_error]
