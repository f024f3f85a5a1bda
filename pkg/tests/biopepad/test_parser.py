"""Tests für Parser, Diagnosen und Serialisierer."""

import pytest

from biopepad.core import Coop, PrefixTerm, RoleOp, SpeciesLeaf
from biopepad.core.expressions import BinOp, Num, Var
from biopepad.core.model import FunctionalRate, MassAction
from biopepad.exceptions import ModelParseError
from biopepad.parser import (
    ModelSource,
    ParseDiagnostic,
    Severity,
    parse_model,
    parse_model_strict,
    read_model,
    serialize_model,
)

from .conftest import CELL_CYCLE_PATH, CYCLE_TEXT, TOY_PATH

FUNCTIONAL_TEXT = """
compartment cell = 1.0;
step = 0.5;
param vmax = 2.0;
param km = 3.0;
rate conv = vmax * E * S / (km + S);
delay conv = 0.25;
species S : max = 20, init = 10;
species E : max = 2, init = 2;
species P : max = 20, init = 0;
history S = 5.0 - 2.0 * t;
S = (conv, 1) << S;
E = (conv, 1) (+) E;
P = (conv, 1) >> P;
system S[10] <conv> (E[2] <conv> P[0]);
"""


def test_parse_toy(toy_text):
    result = parse_model(toy_text, origin="toy")
    assert result.ok
    assert result.diagnostics == []
    spec = result.spec
    assert spec.step_size == 1.0
    assert spec.params == {"k": 0.5}
    assert spec.rates == {"alpha": MassAction("k")}
    assert spec.delays == {"alpha": 2.0}
    assert spec.components["A"].terms == (PrefixTerm("alpha", 1, RoleOp.REACTANT),)
    assert spec.initial_process == Coop(SpeciesLeaf("A", 3), SpeciesLeaf("B", 0), frozenset({"alpha"}))


def test_functional_rate_and_history():
    spec = parse_model_strict(FUNCTIONAL_TEXT)
    rate = spec.rates["conv"]
    assert isinstance(rate, FunctionalRate)
    assert rate.expr == BinOp(
        "/",
        BinOp("*", BinOp("*", Var("vmax"), Var("E")), Var("S")),
        BinOp("+", Var("km"), Var("S")),
    )
    assert spec.histories["S"] == BinOp("-", Num(5.0), BinOp("*", Num(2.0), Var("t")))
    assert spec.components["E"].terms[0].role is RoleOp.ACTIVATOR
    assert spec.compartments[0].name == "cell"
    assert spec.species == ("S", "E", "P")


def test_shorthand_prefix_defaults_to_stoichiometry_one(toy_text):
    spec = parse_model_strict(toy_text.replace("(alpha, 1) << A", "alpha << A"))
    assert spec.components["A"].terms == (PrefixTerm("alpha", 1, RoleOp.REACTANT),)


def test_missing_delay_defaults_to_zero_with_warning(toy_text):
    result = parse_model(toy_text.replace("delay alpha = 2.0;", ""), origin="toy")
    assert result.ok
    assert result.spec.delays["alpha"] == 0.0
    assert [w.message for w in result.warnings] == ["no delay for action 'alpha'; defaulting to 0"]
    assert all(w.severity is Severity.WARNING for w in result.warnings)


def test_syntax_error_reports_line():
    result = parse_model("step = 1.0;\nparam k = ;\n", origin="broken")
    assert not result.ok
    syntax = [d for d in result.errors if d.message.startswith("syntax error")]
    assert syntax and syntax[0].line == 2
    assert "missing system definition" in [d.message for d in result.errors]


def test_missing_semicolon():
    result = parse_model("step = 1.0;\nparam k = 1.0", origin="broken")
    assert "missing ';' after statement" in [d.message for d in result.errors]


def test_diagnostic_format():
    result = parse_model("step = 1.0;", origin="model.biopepad")
    assert [str(d) for d in result.errors] == ["model.biopepad:1:1: error: missing system definition"]


def test_diagnostic_position_from_offset():
    diagnostic = ParseDiagnostic.at("ab\ncd", 4, "oops", origin="x")
    assert (diagnostic.line, diagnostic.column) == (2, 2)
    assert diagnostic.is_error


def test_comments_are_ignored(toy_text):
    commented = "// header\n" + toy_text.replace("param k = 0.5;", "param k = 0.5; // rate constant")
    assert parse_model_strict(commented) == parse_model_strict(toy_text)


def test_invalid_utf8_is_reported():
    result = parse_model(b"step = 1.0;\n\xff", origin="bytes")
    assert not result.ok
    assert result.errors[0].message == "input is not valid UTF-8"
    assert result.errors[0].line == 2


def test_strict_parse_raises_with_diagnostics():
    with pytest.raises(ModelParseError) as excinfo:
        parse_model_strict("step = 1.0;")
    assert excinfo.value.diagnostics[0].message == "missing system definition"


def test_read_model_from_file():
    result = read_model(str(TOY_PATH))
    assert result.ok
    assert ModelSource.from_path(TOY_PATH).origin == str(TOY_PATH)


def test_read_model_missing_file(tmp_path):
    with pytest.raises(OSError):
        read_model(str(tmp_path / "missing.biopepad"))


@pytest.mark.parametrize(
    "text",
    [
        TOY_PATH.read_text(encoding="utf-8"),
        CELL_CYCLE_PATH.read_text(encoding="utf-8"),
        CYCLE_TEXT,
        FUNCTIONAL_TEXT,
    ],
    ids=["toy", "cell_cycle", "cycle", "functional"],
)
def test_serialized_model_parses_to_same_spec(text):
    spec = parse_model_strict(text)
    serialized = serialize_model(spec)
    reparsed = parse_model_strict(serialized)
    assert reparsed == spec
    assert serialize_model(reparsed) == serialized
