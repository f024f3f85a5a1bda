"""
pyparsing-Grammatik der Bio-PEPAd-Modelldateien.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-14

Der Quelltext wird nach Entfernen der Kommentare an ``;`` in Anweisungen
zerlegt; jede Anweisung wird einzeln geparst, damit ein Syntaxfehler die
übrigen Anweisungen nicht verdeckt. Anschließend wird die SystemSpec
aufgebaut und validiert. Der Parser wirft nie für fehlerhafte Eingaben,
sondern liefert Diagnosen.

Unterstützte Anweisungen:
  - ``param k = 0.5;``, ``step = 1.0;``, ``compartment c = 1.0;``
  - ``rate alpha = MA(k);`` oder ``rate alpha = a1*T_I;``
  - ``delay alpha = 2.0;`` (fehlt sie, gilt 0 mit Warnung)
  - ``species A : max = 4, init = 3;``
  - ``history A = 3.0 - t;``
  - ``A = (alpha, 1) << A + (beta, 2) >> A;``
  - ``system A[3] <alpha> B[0];``

Abhängigkeiten:
  - pyparsing
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-14"

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple, Union

import pyparsing as pp

from ..const import OP_ACTIVATOR, OP_INHIBITOR, OP_MODIFIER, OP_PRODUCT, OP_REACTANT
from ..core.expressions import BinOp, Expr, Neg, Num, Var
from ..core.model import (
    Compartment,
    Coop,
    FunctionalRate,
    MassAction,
    PrefixTerm,
    ProcessTree,
    RateExpr,
    RoleOp,
    SpeciesComponent,
    SpeciesLeaf,
    SpeciesQuantity,
    SystemSpec,
    iter_leaves,
)
from ..core.validation import validate
from ..exceptions import ModelParseError
from .diagnostics import INLINE_ORIGIN, ModelSource, ParseDiagnostic, ParseResult, Severity

_LOGGER = logging.getLogger(__name__)

pp.ParserElement.enable_packrat()

RESERVED_WORDS = (
    "param",
    "step",
    "rate",
    "delay",
    "species",
    "system",
    "compartment",
    "history",
    "MA",
    "fMA",
)

DEFAULT_STEP_SIZE = 1.0

_COMMENT = re.compile(r"//[^\n]*")


@dataclass
class _Statement:
    kind: str
    name: Optional[str]
    value: Any
    extra: Any = None
    offset: int = 0


@dataclass
class _Behaviour:
    term: PrefixTerm
    successor: Optional[str]
    offset: int


def _fold_left(tokens):
    elements = tokens[0]
    result = elements[0]
    for op, operand in zip(elements[1::2], elements[2::2]):
        result = BinOp(op, result, operand)
    return result


def _fold_power(tokens):
    elements = list(tokens[0])
    result = elements[-1]
    for operand in reversed(elements[:-1:2]):
        result = BinOp("^", operand, result)
    return result


def _fold_negation(tokens):
    elements = list(tokens[0])
    result = elements[-1]
    for _ in elements[:-1]:
        result = Neg(result)
    return result


def _fold_cooperation(tokens):
    elements = tokens[0]
    result = elements[0]
    for actions, right in zip(elements[1::2], elements[2::2]):
        result = Coop(result, right, frozenset(actions))
    return result


def _behaviour_action(_source: str, loc: int, tokens) -> _Behaviour:
    parts = list(tokens[0])
    action, stoich, role = parts[0], parts[1], parts[2]
    successor = parts[3] if len(parts) > 3 else None
    return _Behaviour(PrefixTerm(action, stoich, RoleOp.from_operator(role)), successor, loc)


def _rate_value(value: Union[MassAction, Expr]) -> RateExpr:
    if isinstance(value, MassAction):
        return value
    return FunctionalRate(value)


@lru_cache(maxsize=None)
def statement_grammar() -> pp.ParserElement:
    """Baut die Grammatik einer einzelnen Anweisung (ohne ``;``)."""
    reserved = pp.MatchFirst([pp.Keyword(word) for word in RESERVED_WORDS])
    identifier = ~reserved + pp.Word(pp.alphas + "_", pp.alphanums + "_")

    real_pattern = r"(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?"
    unsigned_real = pp.Regex(real_pattern)
    signed_real = pp.Regex(r"[+-]?" + real_pattern).set_parse_action(lambda t: float(t[0]))
    integer = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0]))
    equals = pp.Suppress("=")

    # Ausdrücke
    num_expr = unsigned_real.copy().set_parse_action(lambda t: Num(float(t[0])))
    name_expr = identifier.copy().set_parse_action(lambda t: Var(t[0]))
    expr = pp.infix_notation(
        num_expr | name_expr,
        [
            (pp.one_of("^ **"), 2, pp.OpAssoc.RIGHT, _fold_power),
            (pp.Literal("-"), 1, pp.OpAssoc.RIGHT, _fold_negation),
            (pp.one_of("* /"), 2, pp.OpAssoc.LEFT, _fold_left),
            (pp.one_of("+ -"), 2, pp.OpAssoc.LEFT, _fold_left),
        ],
    )

    param_stmt = pp.Keyword("param") + identifier + equals + signed_real
    param_stmt.set_parse_action(lambda t: _Statement("param", t[1], t[2]))

    step_stmt = pp.Keyword("step") + equals + signed_real
    step_stmt.set_parse_action(lambda t: _Statement("step", "h", t[1]))

    compartment_stmt = pp.Keyword("compartment") + identifier + equals + signed_real
    compartment_stmt.set_parse_action(lambda t: _Statement("compartment", t[1], t[2]))

    delay_stmt = pp.Keyword("delay") + identifier + equals + signed_real
    delay_stmt.set_parse_action(lambda t: _Statement("delay", t[1], t[2]))

    mass_action = (
        pp.Suppress(pp.Keyword("MA") | pp.Keyword("fMA"))
        + pp.Suppress("(")
        + identifier
        + pp.Suppress(")")
    )
    mass_action.set_parse_action(lambda t: MassAction(t[0]))
    rate_stmt = pp.Keyword("rate") + identifier + equals + (mass_action | expr)
    rate_stmt.set_parse_action(lambda t: _Statement("rate", t[1], _rate_value(t[2])))

    species_stmt = (
        pp.Keyword("species")
        + identifier
        + pp.Suppress(":")
        + pp.Suppress(pp.Keyword("max"))
        + equals
        + integer
        + pp.Optional(pp.Suppress(",") + pp.Suppress(pp.Keyword("init")) + equals + integer)
    )
    species_stmt.set_parse_action(
        lambda t: _Statement("species", t[1], t[2], t[3] if len(t) > 3 else None)
    )

    history_stmt = pp.Keyword("history") + identifier + equals + expr
    history_stmt.set_parse_action(lambda t: _Statement("history", t[1], t[2]))

    # Komponenten: (alpha, 1) << A + beta >> A
    role = pp.MatchFirst(
        [pp.Literal(op) for op in (OP_REACTANT, OP_PRODUCT, OP_ACTIVATOR, OP_INHIBITOR, OP_MODIFIER)]
    )
    full_prefix = pp.Suppress("(") + identifier + pp.Suppress(",") + integer + pp.Suppress(")")
    # "(a, 1)" darf als "a" abgekürzt werden
    short_prefix = identifier.copy().set_parse_action(lambda t: [t[0], 1])
    behaviour = pp.Group((full_prefix | short_prefix) + role + pp.Optional(identifier))
    behaviour.set_parse_action(_behaviour_action)
    component_stmt = identifier + equals + pp.DelimitedList(behaviour, delim="+")
    component_stmt.set_parse_action(
        lambda loc, t: _Statement("component", t[0], list(t[1:]), offset=loc)
    )

    # System: A[3] <alpha> B[0]
    leaf = identifier + pp.Suppress("[") + integer + pp.Suppress("]")
    leaf.set_parse_action(lambda t: SpeciesLeaf(t[0], t[1]))
    coop_set = pp.Group(
        pp.Suppress("<") + pp.Optional(pp.DelimitedList(identifier)) + pp.Suppress(">")
    )
    process = pp.infix_notation(leaf, [(coop_set, 2, pp.OpAssoc.LEFT, _fold_cooperation)])
    system_stmt = pp.Keyword("system") + process
    system_stmt.set_parse_action(lambda t: _Statement("system", "", t[1]))

    return pp.MatchFirst(
        [
            param_stmt,
            step_stmt,
            compartment_stmt,
            rate_stmt,
            delay_stmt,
            species_stmt,
            history_stmt,
            system_stmt,
            component_stmt,
        ]
    )


def strip_comments(text: str) -> str:
    """Ersetzt ``// ...``-Kommentare durch Leerzeichen (Offsets bleiben erhalten)."""
    return _COMMENT.sub(lambda match: " " * len(match.group()), text)


class _ModelBuilder:
    """Sammelt Anweisungen und baut daraus die SystemSpec."""

    def __init__(self, source: ModelSource):
        self._source = source
        self._text = strip_comments(source.text)
        self._logger = logging.getLogger(f"{__name__}._ModelBuilder")
        self.diagnostics: List[ParseDiagnostic] = []
        self._positions: Dict[Tuple[str, str], int] = {}
        self._params: Dict[str, float] = {}
        self._step: Optional[float] = None
        self._compartments: List[Compartment] = []
        self._rates: Dict[str, RateExpr] = {}
        self._delays: Dict[str, float] = {}
        self._species: Dict[str, Tuple[int, Optional[int]]] = {}
        self._histories: Dict[str, Expr] = {}
        self._components: Dict[str, List[_Behaviour]] = {}
        self._system: Optional[ProcessTree] = None

    def _report(self, offset: int, message: str, severity: Severity = Severity.ERROR) -> None:
        self.diagnostics.append(
            ParseDiagnostic.at(self._source.text, offset, message, severity, self._source.origin)
        )

    def _has_errors(self) -> bool:
        return any(d.is_error for d in self.diagnostics)

    def _split(self) -> List[Tuple[int, str]]:
        chunks: List[Tuple[int, str]] = []
        start = 0
        for index, char in enumerate(self._text):
            if char == ";":
                chunks.append((start, self._text[start:index]))
                start = index + 1
        rest = self._text[start:]
        if rest.strip():
            self._report(start + len(rest) - len(rest.lstrip()), "missing ';' after statement")
        return chunks

    def run(self) -> ParseResult:
        grammar = statement_grammar()
        for start, chunk in self._split():
            if not chunk.strip():
                continue
            try:
                statement = grammar.parse_string(chunk, parse_all=True)[0]
            except pp.ParseBaseException as err:
                self._report(start + err.loc, f"syntax error: {err.msg}")
                continue
            leading = len(chunk) - len(chunk.lstrip())
            self._add(statement, start, start + leading)
        return self._finish()

    def _define(self, kind: str, name: str, offset: int) -> bool:
        key = (kind, name)
        if key in self._positions:
            label = f"{kind} '{name}'" if kind != "step" else "step"
            self._report(offset, f"duplicate definition of {label}")
            return False
        self._positions[key] = offset
        return True

    def _add(self, statement: _Statement, chunk_start: int, offset: int) -> None:
        kind, name = statement.kind, statement.name
        if not self._define(kind, name, offset):
            return
        if kind == "param":
            self._params[name] = statement.value
        elif kind == "step":
            self._step = statement.value
        elif kind == "compartment":
            self._compartments.append(Compartment(name, statement.value))
        elif kind == "rate":
            self._rates[name] = statement.value
        elif kind == "delay":
            self._delays[name] = statement.value
        elif kind == "species":
            self._species[name] = (statement.value, statement.extra)
        elif kind == "history":
            self._histories[name] = statement.value
        elif kind == "component":
            for behaviour in statement.value:
                behaviour.offset += chunk_start
            self._components[name] = statement.value
        elif kind == "system":
            self._system = statement.value

    def _position_of(self, location: str, subject: str) -> int:
        for key in ((location, subject), ("component", subject), ("species", subject), ("system", "")):
            if key in self._positions:
                return self._positions[key]
        return 0

    def _finish(self) -> ParseResult:
        if self._system is None:
            self._report(0, "missing system definition")
        if self._has_errors():
            return ParseResult(None, self.diagnostics)

        components: Dict[str, SpeciesComponent] = {}
        for name, behaviours in self._components.items():
            for behaviour in behaviours:
                if behaviour.successor is not None and behaviour.successor != name:
                    self._report(
                        behaviour.offset,
                        f"only tail self-reference is supported: '{name}' cannot continue as "
                        f"'{behaviour.successor}'",
                    )
            components[name] = SpeciesComponent(name, tuple(b.term for b in behaviours))

        quantities: Dict[str, SpeciesQuantity] = {}
        system_offset = self._positions[("system", "")]
        for leaf in iter_leaves(self._system):
            declaration = self._species.get(leaf.name)
            if declaration is None:
                self._report(system_offset, f"missing species declaration for '{leaf.name}'")
                continue
            max_level, init_level = declaration
            if init_level is not None and init_level != leaf.level:
                self._report(
                    self._positions[("species", leaf.name)],
                    f"initial level of '{leaf.name}' in system ({leaf.level}) differs from "
                    f"species declaration ({init_level})",
                )
            quantities.setdefault(leaf.name, SpeciesQuantity(max_level, leaf.level))
        for name, (max_level, init_level) in self._species.items():
            if name not in quantities:
                quantities[name] = SpeciesQuantity(max_level, init_level if init_level is not None else 0)

        delays = dict(self._delays)
        for name, behaviours in self._components.items():
            for behaviour in behaviours:
                action = behaviour.term.action
                if action not in delays:
                    delays[action] = 0.0
                    self._report(
                        behaviour.offset,
                        f"no delay for action '{action}'; defaulting to 0",
                        Severity.WARNING,
                    )

        if self._has_errors():
            return ParseResult(None, self.diagnostics)

        spec = SystemSpec(
            quantities=quantities,
            step_size=self._step if self._step is not None else DEFAULT_STEP_SIZE,
            params=dict(self._params),
            rates=dict(self._rates),
            components=components,
            initial_process=self._system,
            delays=delays,
            histories=dict(self._histories),
            compartments=tuple(self._compartments),
        )
        for violation in validate(spec):
            self._report(self._position_of(violation.location, violation.subject), str(violation))
        if self._has_errors():
            return ParseResult(None, self.diagnostics)

        self._logger.debug(
            f"Modell gelesen: {len(spec.species)} Spezies, {len(spec.actions)} Aktionen "
            f"({self._source.origin})"
        )
        return ParseResult(spec, self.diagnostics)


def _decode(data: bytes, origin: str) -> Union[ModelSource, ParseDiagnostic]:
    try:
        return ModelSource(data.decode("utf-8"), origin)
    except UnicodeDecodeError as err:
        prefix = data[: err.start].decode("utf-8", errors="replace")
        return ParseDiagnostic.at(prefix, len(prefix), "input is not valid UTF-8", origin=origin)


def parse_model(
    src: Union[ModelSource, str, bytes],
    origin: str = INLINE_ORIGIN,
) -> ParseResult:
    """Parst einen Modelltext.

    Args:
        src: Quelltext als ModelSource, String oder Bytes (UTF-8)
        origin: Herkunftsangabe für Strings und Bytes

    Returns:
        ParseResult mit gültiger SystemSpec oder Fehlerdiagnosen; Warnungen
        (z.B. fehlende Verzögerungen) stehen auch bei Erfolg in ``diagnostics``
    """
    if isinstance(src, bytes):
        decoded = _decode(src, origin)
        if isinstance(decoded, ParseDiagnostic):
            return ParseResult(None, [decoded])
        src = decoded
    elif isinstance(src, str):
        src = ModelSource(src, origin)

    try:
        return _ModelBuilder(src).run()
    except Exception as err:  # pragma: no cover - Sicherheitsnetz
        _LOGGER.exception(f"Unerwarteter Fehler beim Parsen von {src.origin}: {err}")
        return ParseResult(
            None,
            [ParseDiagnostic(1, 1, f"internal parser error: {err}", Severity.ERROR, src.origin)],
        )


def parse_model_strict(src: Union[ModelSource, str, bytes], origin: str = INLINE_ORIGIN) -> SystemSpec:
    """Wie ``parse_model``, wirft aber bei Fehlern.

    Raises:
        ModelParseError: Wenn der Text Fehler enthält
    """
    result = parse_model(src, origin)
    if result.spec is None:
        raise ModelParseError(result.errors)
    for warning in result.warnings:
        _LOGGER.warning(str(warning))
    return result.spec


def read_model(path: str) -> ParseResult:
    """Liest und parst eine Modelldatei.

    Raises:
        OSError: Wenn die Datei nicht gelesen werden kann
    """
    with open(path, "rb") as handle:
        data = handle.read()
    return parse_model(data, origin=str(path))
