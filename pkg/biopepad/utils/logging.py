"""
Erweiterte Logging-Funktionalität für das Bio-PEPAd Toolkit.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-19

Abhängigkeiten:
  - logging
  - os
  - enum
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-19"

import os
import enum
import logging
from logging.handlers import RotatingFileHandler
from typing import Any, Dict, MutableMapping, Optional, TextIO, Tuple, Union

from ..const import LOG_DIR, LOG_LEVEL_DEBUG, LOG_LEVEL_INFO, LOG_LEVEL_WARNING, LOG_LEVEL_ERROR

# Log-Level-Enum
class LogLevel(enum.Enum):
    """Enum für Log-Level."""
    DEBUG = LOG_LEVEL_DEBUG
    INFO = LOG_LEVEL_INFO
    WARNING = LOG_LEVEL_WARNING
    ERROR = LOG_LEVEL_ERROR

    @classmethod
    def from_string(cls, level_str: str) -> 'LogLevel':
        """Konvertiert einen String in ein LogLevel.

        Args:
            level_str: String-Repräsentation des Log-Levels

        Returns:
            LogLevel-Enum

        Raises:
            ValueError: Wenn der String kein gültiges Log-Level ist
        """
        for level in cls:
            if level.value == level_str.lower():
                return level

        raise ValueError(f"Ungültiges Log-Level: {level_str}")

    def to_logging_level(self) -> int:
        """Konvertiert das LogLevel in einen logging-Level-Integer."""
        level_map = {
            LogLevel.DEBUG: logging.DEBUG,
            LogLevel.INFO: logging.INFO,
            LogLevel.WARNING: logging.WARNING,
            LogLevel.ERROR: logging.ERROR
        }
        return level_map[self]

def ensure_log_dir(log_dir: str = LOG_DIR) -> None:
    """Stellt sicher, dass das Log-Verzeichnis existiert."""
    if not os.path.exists(log_dir):
        os.makedirs(log_dir)
        logging.getLogger(__name__).info(f"Log-Verzeichnis erstellt: {log_dir}")

def setup_logger(
    name: str,
    level: Union[LogLevel, str] = LogLevel.WARNING,
    file_logging: bool = False,
    console_logging: bool = True,
    log_format: Optional[str] = None,
    max_file_size: int = 10 * 1024 * 1024,  # 10 MB
    backup_count: int = 5,
    log_dir: str = LOG_DIR,
    stream: Optional[TextIO] = None,
) -> logging.Logger:
    """Richtet einen Logger ein.

    Die Konsolenausgabe geht auf stderr, damit stdout für Ergebnisse
    (DDE-Gleichungen, Zustandszahlen) frei bleibt.

    Args:
        name: Name des Loggers
        level: Log-Level
        file_logging: Ob in eine Datei geloggt werden soll
        console_logging: Ob auf die Konsole geloggt werden soll
        log_format: Format der Log-Nachrichten
        max_file_size: Maximale Größe der Log-Datei in Bytes
        backup_count: Anzahl der zu behaltenden Backup-Dateien
        log_dir: Zielverzeichnis der Log-Datei
        stream: Ziel der Konsolenausgabe (Standard: ``sys.stderr``)

    Returns:
        Der konfigurierte Logger
    """
    if isinstance(level, str):
        level = LogLevel.from_string(level)

    logger = logging.getLogger(name)
    logger.setLevel(level.to_logging_level())

    # Lösche existierende Handler
    for handler in logger.handlers[:]:
        logger.removeHandler(handler)
        handler.close()

    if log_format is None:
        log_format = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    formatter = logging.Formatter(log_format)

    if file_logging:
        ensure_log_dir(log_dir)

        log_file = os.path.join(log_dir, f"{name}.log")
        file_handler = RotatingFileHandler(
            log_file,
            maxBytes=max_file_size,
            backupCount=backup_count
        )
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    if console_logging:
        console_handler = logging.StreamHandler(stream)
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

    return logger

class ContextLogger(logging.LoggerAdapter):
    """Logger mit Kontext für zusammenhängende Log-Nachrichten.

    Wird für Ensemble-Läufe (Lauf-Index, Seed) und Kommandos (Modellpfad)
    verwendet. Der Kontext wird an die Nachricht angehängt und liegt
    zusätzlich als ``biopepad_context`` am LogRecord.
    """

    def __init__(self, logger: logging.Logger, context: Optional[Dict[str, Any]] = None):
        super().__init__(logger, dict(context or {}))

    @property
    def context(self) -> Dict[str, Any]:
        return self.extra

    def clear_context(self) -> None:
        """Löscht den aktuellen Kontext."""
        self.extra.clear()

    def process(self, msg: Any, kwargs: MutableMapping[str, Any]) -> Tuple[Any, MutableMapping[str, Any]]:
        if not self.extra:
            return msg, kwargs
        kwargs.setdefault("extra", {})["biopepad_context"] = dict(self.extra)
        context_str = ", ".join(f"{k}={v}" for k, v in self.extra.items())
        return f"{msg} [Context: {context_str}]", kwargs


def get_context_logger(name: str, **kwargs) -> ContextLogger:
    """Erstellt einen ContextLogger.

    Args:
        name: Name des Loggers
        **kwargs: Initialer Kontext

    Returns:
        ContextLogger-Instanz
    """
    return ContextLogger(logging.getLogger(name), kwargs)
