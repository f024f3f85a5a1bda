"""biopepad.

Usage:
  biopepad check <model> [options]
  biopepad explore <model> [options]
  biopepad simulate <model> [options]
  biopepad dde <model> [options]
  biopepad replay <manifest> [options]
  biopepad -h | --help
  biopepad --version

Options:
  -h --help             Show this screen.
  --version             Show version.
  --out=<dir>           Output directory (default: $BIOPEPAD_OUTPUT_DIR or ./out).
  --log-level=<level>   debug, info, warning or error (default: $BIOPEPAD_LOG_LEVEL or warning).
  --log-file            Also log to logs/biopepad.log.
  --format=<fmt>        explore: dot or json; dde: text or json.
  --max-states=<n>      explore: state limit before truncation.
  --max-pending=<n>     explore: limit on pending entries per species.
  --capacity=<mode>     Product capacity rule: strict or literal.
  --canonical=<mode>    explore: state identification, rate or exact.
  --t-end=<t>           simulate/dde: end time.
  --seed=<n>            simulate: seed (base seed for ensembles).
  --runs=<n>            simulate: number of runs.
  --grid=<dt>           simulate: sample on a fixed grid.
  --jobs=<n>            simulate: worker processes for ensembles.
  --rng=<alg>           simulate: philox or pcg64.
  --step=<h>            dde: integration step.
  --solve               dde: integrate and write the solution CSV.
  --export-only         dde: only write the equations.
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-19"

import logging
import os
import sys
from pathlib import Path
from typing import Any, Dict, List, Literal, Mapping, Optional, TextIO

from docopt import DocoptExit, docopt
from pydantic import BaseModel, ValidationError

from ..const import (
    DEFAULT_OUTPUT_DIR,
    DOMAIN,
    ENV_LOG_LEVEL,
    ENV_OUTPUT_DIR,
    EXIT_IO,
    EXIT_NUMERIC,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VALIDATION,
    LOG_LEVEL_WARNING,
    TOOL_VERSION,
)
from ..exceptions import (
    BioPepadError,
    IntegrationError,
    ModelParseError,
    SimulationError,
    StepSizeError,
)
from ..utils.logging import setup_logger
from .commands import CommandContext, UsageError, get_registry

_LOGGER = logging.getLogger(__name__)


class ToolSettings(BaseModel):
    """Globale Einstellungen: Flags vor Umgebungsvariablen vor Standardwerten."""

    output_dir: Path = Path(DEFAULT_OUTPUT_DIR)
    log_level: Literal["debug", "info", "warning", "error"] = LOG_LEVEL_WARNING
    log_file: bool = False

    @classmethod
    def resolve(cls, arguments: Mapping[str, Any], environ: Mapping[str, str] = os.environ) -> "ToolSettings":
        """Bestimmt die Einstellungen aus docopt-Argumenten und Umgebung.

        Raises:
            pydantic.ValidationError: Bei ungültigen Werten
        """
        values: Dict[str, Any] = {"log_file": bool(arguments.get("--log-file"))}
        output_dir = arguments.get("--out") or environ.get(ENV_OUTPUT_DIR)
        if output_dir:
            values["output_dir"] = output_dir
        log_level = arguments.get("--log-level") or environ.get(ENV_LOG_LEVEL)
        if log_level:
            values["log_level"] = log_level.lower()
        return cls.model_validate(values)


def _selected_command(arguments: Mapping[str, Any]) -> str:
    for name in get_registry().get_command_names():
        if arguments.get(name):
            return name
    raise UsageError("no command given")


def main(
    argv: Optional[List[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
    environ: Mapping[str, str] = os.environ,
) -> int:
    """Einstiegspunkt der Kommandozeile.

    Args:
        argv: Argumente ohne Programmnamen (Standard: ``sys.argv[1:]``)
        stdout: Ziel für Ergebnisse
        stderr: Ziel für Diagnosen und Fehlermeldungen
        environ: Umgebungsvariablen

    Returns:
        Exit-Code (0 ok, 1 Validierung, 2 E/A, 3 abgeschnitten, 4 numerisch, 64 Bedienfehler)
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    try:
        arguments = docopt(__doc__, argv=argv, help=False, version=f"{DOMAIN} {TOOL_VERSION}")
    except DocoptExit as err:
        print(str(err), file=stderr)
        print(get_registry().describe(), file=stderr)
        return EXIT_USAGE

    if arguments["--help"]:
        print(__doc__.strip(), file=stdout)
        print(file=stdout)
        print(get_registry().describe(), file=stdout)
        return EXIT_OK

    try:
        settings = ToolSettings.resolve(arguments, environ)
        name = _selected_command(arguments)
    except (ValidationError, UsageError) as err:
        print(f"usage error: {err}", file=stderr)
        return EXIT_USAGE

    setup_logger(DOMAIN, settings.log_level, file_logging=settings.log_file, stream=stderr)
    command = get_registry().get_command(name)
    context = CommandContext(arguments, settings.output_dir, argv, stdout, stderr)

    try:
        if command.writes_manifest:
            settings.output_dir.mkdir(parents=True, exist_ok=True)
        return command.execute(context).exit_code
    except UsageError as err:
        print(f"usage error: {err}", file=stderr)
        return EXIT_USAGE
    except ModelParseError as err:
        for diagnostic in err.diagnostics:
            print(str(diagnostic), file=stderr)
        return EXIT_VALIDATION
    except (SimulationError, IntegrationError, StepSizeError) as err:
        _LOGGER.error(f"Numerischer Fehler: {err}")
        print(f"numeric failure: {err}", file=stderr)
        return EXIT_NUMERIC
    except BioPepadError as err:
        _LOGGER.error(f"Semantischer Fehler: {err}")
        print(f"error: {err}", file=stderr)
        return EXIT_VALIDATION
    except (OSError, ValidationError) as err:
        _LOGGER.error(f"E/A-Fehler: {err}")
        print(f"i/o error: {err}", file=stderr)
        return EXIT_IO


def run() -> None:
    sys.exit(main())
