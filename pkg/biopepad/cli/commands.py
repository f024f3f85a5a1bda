"""
Kommandos der Kommandozeile und ihre Registry.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-19

Jedes Kommando ist eine ``Command``-Klasse, die sich per
``@register_command`` in der globalen ``CommandRegistry`` einträgt. Die
Optionen eines Kommandos werden über ein pydantic-Modell validiert;
Validierungsfehler sind Bedienfehler.

Abhängigkeiten:
  - pydantic
  - biopepad.parser, biopepad.semantics, biopepad.dssa, biopepad.dde
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-19"

import io
import logging
import shutil
import tempfile
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, TextIO, Type

from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, PositiveInt, field_validator

from ..const import (
    CAPACITY_STRICT,
    CANONICAL_RATE,
    DEFAULT_MAX_PENDING_PER_SPECIES,
    DEFAULT_MAX_STATES,
    DEFAULT_RNG_ALGORITHM,
    EXIT_OK,
    EXIT_TRUNCATED,
    EXIT_VALIDATION,
    FORMAT_DOT,
    FORMAT_JSON,
    FORMAT_TEXT,
)
from ..core.model import SystemSpec
from ..dde import DDE_FORMATS, derive_dde, render_dde, solution_csv, solve_dde
from ..dssa import SimulationOptions, ensemble, ensemble_csv, simulate, trajectory_csv, write_csv
from ..exceptions import ModelParseError
from ..parser import read_model
from ..semantics import SLTS_FORMATS, ExplorationLimits, explore_slts, write_slts
from ..utils.logging import get_context_logger
from .manifest import RunManifest, file_digest

_LOGGER = logging.getLogger(__name__)

# Standard-Gitterauflösung eines Ensembles: t_end / ENSEMBLE_GRID_POINTS
ENSEMBLE_GRID_POINTS = 100


class UsageError(Exception):
    """Ungültige Kommandozeilenoptionen."""


@dataclass
class CommandContext:
    """Laufzeitkontext eines Kommandos."""
    arguments: Dict[str, Any]
    output_dir: Path
    argv: List[str]
    stdout: TextIO
    stderr: TextIO


@dataclass
class CommandResult:
    """Ergebnis eines Kommandos."""
    exit_code: int = EXIT_OK
    outputs: List[Path] = field(default_factory=list)
    seed: Optional[int] = None
    options: Dict[str, Any] = field(default_factory=dict)


class Command(ABC):
    """Abstrakte Basisklasse eines Kommandos."""

    options_model: Optional[Type[BaseModel]] = None

    def __init__(self):
        self._logger = logging.getLogger(f"{__name__}.{type(self).__name__}")

    @property
    @abstractmethod
    def name(self) -> str:
        """Name des Kommandos auf der Kommandozeile."""

    @property
    @abstractmethod
    def description(self) -> str:
        """Kurzbeschreibung."""

    @property
    def writes_manifest(self) -> bool:
        return True

    def parse_options(self, arguments: Dict[str, Any]) -> Optional[BaseModel]:
        """Validiert die docopt-Argumente mit dem Optionsmodell.

        Raises:
            UsageError: Bei ungültigen Werten
        """
        if self.options_model is None:
            return None
        values = {}
        for name in self.options_model.model_fields:
            value = arguments.get("--" + name.replace("_", "-"))
            if value is not None and value is not False:
                values[name] = value
        try:
            return self.options_model.model_validate(values)
        except ValueError as err:
            raise UsageError(_usage_message(err)) from err

    def load_model(self, context: CommandContext) -> SystemSpec:
        """Liest das Modell und gibt Warnungen auf stderr aus.

        Raises:
            OSError: Wenn die Datei nicht lesbar ist
            ModelParseError: Wenn das Modell Fehler enthält
        """
        result = read_model(context.arguments["<model>"])
        for diagnostic in result.warnings:
            print(str(diagnostic), file=context.stderr)
        if result.spec is None:
            raise ModelParseError(result.errors)
        return result.spec

    def execute(self, context: CommandContext) -> CommandResult:
        """Führt das Kommando aus und schreibt bei Ausgaben das Manifest."""
        options = self.parse_options(context.arguments)
        started = time.perf_counter()
        logger = get_context_logger(f"{__name__}.{type(self).__name__}", model=context.arguments.get("<model>"))
        logger.info(f"Starte Kommando '{self.name}'")
        result = self.run(context, options)
        if options is not None:
            result.options = options.model_dump()
        if self.writes_manifest and result.outputs:
            self._write_manifest(context, result, time.perf_counter() - started)
        logger.info(f"Kommando '{self.name}' beendet mit Exit-Code {result.exit_code}")
        return result

    def _write_manifest(self, context: CommandContext, result: CommandResult, duration: float) -> None:
        model = context.arguments["<model>"]
        resolved = str(Path(model).resolve())
        manifest = RunManifest(
            command=self.name,
            model_path=resolved,
            model_digest=file_digest(model),
            arguments=result.options,
            argv=[resolved if arg == model else arg for arg in context.argv],
            seed=result.seed,
            duration_seconds=duration,
        )
        manifest.record_outputs(result.outputs)
        manifest.write(context.output_dir)

    @abstractmethod
    def run(self, context: CommandContext, options: Optional[BaseModel]) -> CommandResult:
        """Führt die eigentliche Arbeit aus."""


def _usage_message(err: ValueError) -> str:
    errors = getattr(err, "errors", None)
    if callable(errors):
        parts = []
        for item in errors():
            option = "--" + "-".join(str(loc).replace("_", "-") for loc in item["loc"])
            parts.append(f"{option}: {item['msg']}")
        return "; ".join(parts)
    return str(err)


class CommandRegistry:
    """Zentrale Registry für Kommandos."""

    def __init__(self):
        self._commands: Dict[str, Command] = {}
        self._logger = logging.getLogger(f"{__name__}.CommandRegistry")

    def register(self, command: Command) -> None:
        """Registriert ein Kommando.

        Raises:
            ValueError: Wenn ein Kommando mit demselben Namen bereits existiert
        """
        if command.name in self._commands:
            raise ValueError(f"Kommando mit dem Namen '{command.name}' ist bereits registriert")
        self._commands[command.name] = command
        self._logger.debug(f"Kommando '{command.name}' registriert")

    def get_command(self, name: str) -> Optional[Command]:
        return self._commands.get(name)

    def get_command_names(self) -> List[str]:
        return list(self._commands.keys())

    def describe(self) -> str:
        """Übersicht der registrierten Kommandos mit Kurzbeschreibung."""
        width = max((len(name) for name in self._commands), default=0)
        lines = ["Commands:"]
        for name, command in self._commands.items():
            lines.append(f"  {name:<{width}}  {command.description}")
        return "\n".join(lines)


# Globale Kommando-Registry
_REGISTRY = CommandRegistry()


def register_command(command_class: Type[Command]) -> Type[Command]:
    """Dekorator, der eine Instanz der Kommandoklasse registriert."""
    _REGISTRY.register(command_class())
    return command_class


def get_registry() -> CommandRegistry:
    return _REGISTRY


class _Options(BaseModel):
    model_config = ConfigDict(extra="forbid")


def _known_format(value: str, formats: List[str]) -> str:
    if value not in formats:
        raise ValueError(f"expected one of {', '.join(formats)}")
    return value


class ExploreOptions(_Options):
    format: str = FORMAT_DOT
    max_states: PositiveInt = DEFAULT_MAX_STATES
    max_pending: PositiveInt = DEFAULT_MAX_PENDING_PER_SPECIES
    capacity: Literal["strict", "literal"] = CAPACITY_STRICT
    canonical: Literal["rate", "exact"] = CANONICAL_RATE

    @field_validator("format")
    @classmethod
    def _slts_format(cls, value: str) -> str:
        return _known_format(value, SLTS_FORMATS)


class SimulateOptions(_Options):
    t_end: PositiveFloat
    seed: int = Field(default=0, ge=0)
    runs: PositiveInt = 1
    grid: Optional[PositiveFloat] = None
    jobs: Optional[PositiveInt] = None
    capacity: Literal["strict", "literal"] = CAPACITY_STRICT
    rng: Literal["philox", "pcg64"] = DEFAULT_RNG_ALGORITHM


class DDEOptions(_Options):
    t_end: Optional[PositiveFloat] = None
    step: PositiveFloat = 0.01
    solve: bool = False
    export_only: bool = False
    format: str = FORMAT_TEXT

    @field_validator("format")
    @classmethod
    def _dde_format(cls, value: str) -> str:
        return _known_format(value, DDE_FORMATS)


@register_command
class CheckCommand(Command):
    """Parst und validiert ein Modell."""

    @property
    def name(self) -> str:
        return "check"

    @property
    def description(self) -> str:
        return "Parse and validate a model file"

    @property
    def writes_manifest(self) -> bool:
        return False

    def run(self, context: CommandContext, options: Optional[BaseModel]) -> CommandResult:
        result = read_model(context.arguments["<model>"])
        for diagnostic in result.diagnostics:
            print(str(diagnostic), file=context.stderr)
        if result.spec is None:
            return CommandResult(EXIT_VALIDATION)
        spec = result.spec
        print(f"ok: {len(spec.species)} species, {len(spec.actions)} actions", file=context.stdout)
        return CommandResult(EXIT_OK)


@register_command
class ExploreCommand(Command):
    """Exploriert das SLTS."""

    options_model = ExploreOptions

    @property
    def name(self) -> str:
        return "explore"

    @property
    def description(self) -> str:
        return "Build the stochastic labelled transition system"

    def run(self, context: CommandContext, options: ExploreOptions) -> CommandResult:
        spec = self.load_model(context)
        slts = explore_slts(
            spec,
            ExplorationLimits(options.max_states, options.max_pending),
            capacity=options.capacity,
            canonical=options.canonical,
        )
        path = write_slts(slts, context.output_dir / f"slts.{options.format}", options.format)
        print(slts.summary(), file=context.stdout)
        return CommandResult(EXIT_TRUNCATED if slts.truncated else EXIT_OK, [path])


@register_command
class SimulateCommand(Command):
    """Simuliert Trajektorien mit dem DSSA."""

    options_model = SimulateOptions

    @property
    def name(self) -> str:
        return "simulate"

    @property
    def description(self) -> str:
        return "Run the delay stochastic simulation"

    def run(self, context: CommandContext, options: SimulateOptions) -> CommandResult:
        spec = self.load_model(context)
        sim_options = SimulationOptions(capacity=options.capacity, rng_algorithm=options.rng)
        if options.runs == 1:
            trajectory = simulate(spec, options.t_end, options.seed, grid=options.grid, options=sim_options)
            path = write_csv(trajectory_csv(trajectory), context.output_dir / "trajectory.csv")
            final = trajectory.final
            levels = ", ".join(f"{name}={count}" for name, count in zip(trajectory.species, final.counts))
            print(f"final state at t={final.time!r}: {levels} (pending {final.pending})", file=context.stdout)
        else:
            grid = options.grid or options.t_end / ENSEMBLE_GRID_POINTS
            result = ensemble(spec, options.t_end, options.runs, options.seed, grid, options.jobs, sim_options)
            path = write_csv(ensemble_csv(result), context.output_dir / "ensemble.csv")
            print(f"{options.runs} runs aggregated on {len(result.times)} grid points", file=context.stdout)
        return CommandResult(EXIT_OK, [path], seed=options.seed)


@register_command
class DDECommand(Command):
    """Leitet das DDE-System ab und integriert es optional."""

    options_model = DDEOptions

    @property
    def name(self) -> str:
        return "dde"

    @property
    def description(self) -> str:
        return "Derive and optionally solve the delay differential equations"

    def run(self, context: CommandContext, options: DDEOptions) -> CommandResult:
        if options.solve and options.export_only:
            raise UsageError("--solve and --export-only are mutually exclusive")
        if options.solve and options.t_end is None:
            raise UsageError("--solve requires --t-end")
        spec = self.load_model(context)
        system = derive_dde(spec)
        rendered = render_dde(system, options.format)
        suffix = "txt" if options.format == FORMAT_TEXT else FORMAT_JSON
        export_path = context.output_dir / f"dde.{suffix}"
        export_path.write_text(rendered, encoding="utf-8")
        outputs = [export_path]
        context.stdout.write(rendered)
        if options.solve:
            grid = solve_dde(system, options.t_end, options.step)
            outputs.append(write_csv(solution_csv(grid), context.output_dir / "dde_solution.csv"))
            if grid.step != options.step:
                print(f"step size adjusted to {grid.step!r}", file=context.stderr)
        return CommandResult(EXIT_OK, outputs)


@register_command
class ReplayCommand(Command):
    """Führt ein aufgezeichnetes Kommando erneut aus und vergleicht die Digests."""

    @property
    def name(self) -> str:
        return "replay"

    @property
    def description(self) -> str:
        return "Re-run a recorded command from its manifest and compare outputs"

    @property
    def writes_manifest(self) -> bool:
        return False

    def run(self, context: CommandContext, options: Optional[BaseModel]) -> CommandResult:
        from .main import main

        manifest = RunManifest.read(context.arguments["<manifest>"])
        workdir = Path(tempfile.mkdtemp(prefix="biopepad-replay-"))
        try:
            argv = _without_out(manifest.argv) + [f"--out={workdir}"]
            self._logger.info(f"Wiederhole Kommando: {' '.join(argv)}")
            exit_code = main(argv, stdout=io.StringIO(), stderr=context.stderr)
            mismatches = []
            for name, digest in sorted(manifest.outputs.items()):
                produced = workdir / name
                actual = file_digest(produced) if produced.exists() else None
                status = "identical" if actual == digest else "differs"
                if actual != digest:
                    mismatches.append(name)
                print(f"{name}: {status}", file=context.stdout)
        finally:
            shutil.rmtree(workdir, ignore_errors=True)
        if mismatches:
            return CommandResult(EXIT_VALIDATION)
        return CommandResult(exit_code)


def _without_out(argv: List[str]) -> List[str]:
    result: List[str] = []
    skip = False
    for arg in argv:
        if skip:
            skip = False
            continue
        if arg == "--out":
            skip = True
            continue
        if arg.startswith("--out="):
            continue
        result.append(arg)
    return result
