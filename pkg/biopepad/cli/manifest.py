"""
Lauf-Manifest für reproduzierbare Kommandos.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-18

Jedes Kommando mit Ausgabedateien schreibt ``manifest.json`` in sein
Ausgabeverzeichnis: Kommando, Modellpfad und -digest, alle Flags, Seed,
Tool-Version, Laufzeit und SHA-256 jeder Ausgabedatei.

Abhängigkeiten:
  - pydantic
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-18"

import datetime
import hashlib
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field

from ..const import MANIFEST_FILENAME, TOOL_VERSION

_LOGGER = logging.getLogger(__name__)


def file_digest(path: Union[str, Path]) -> str:
    """SHA-256 einer Datei als Hex-String."""
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for block in iter(lambda: handle.read(65536), b""):
            digest.update(block)
    return digest.hexdigest()


class RunManifest(BaseModel):
    """Beschreibung eines Kommandolaufs."""

    command: str
    model_path: str
    model_digest: str
    arguments: Dict[str, Any] = Field(default_factory=dict)
    argv: List[str] = Field(default_factory=list)
    seed: Optional[int] = None
    tool_version: str = TOOL_VERSION
    started_at: datetime.datetime = Field(default_factory=lambda: datetime.datetime.now(datetime.timezone.utc))
    duration_seconds: float = 0.0
    outputs: Dict[str, str] = Field(default_factory=dict)

    def record_outputs(self, paths: List[Path]) -> None:
        """Trägt die Digests der Ausgabedateien ein (Schlüssel: Dateiname)."""
        self.outputs = {path.name: file_digest(path) for path in paths}

    def write(self, directory: Union[str, Path]) -> Path:
        """Schreibt das Manifest in ``directory``."""
        path = Path(directory) / MANIFEST_FILENAME
        path.write_text(self.model_dump_json(indent=2) + "\n", encoding="utf-8")
        _LOGGER.info(f"Manifest geschrieben: {path}")
        return path

    @classmethod
    def read(cls, path: Union[str, Path]) -> "RunManifest":
        """Liest ein Manifest.

        Raises:
            OSError: Wenn die Datei nicht lesbar ist
            pydantic.ValidationError: Wenn der Inhalt kein gültiges Manifest ist
        """
        return cls.model_validate_json(Path(path).read_text(encoding="utf-8"))
