"""Tests für die Validierung der Modellinvarianten."""

import pytest

from biopepad.core import validate
from biopepad.parser import parse_model


def _messages(text):
    result = parse_model(text, origin="model")
    assert not result.ok
    return [diagnostic.message for diagnostic in result.errors]


def test_valid_models_have_no_violations(toy_spec, cell_cycle_spec, cycle_spec):
    assert validate(toy_spec) == []
    assert validate(cell_cycle_spec) == []
    assert validate(cycle_spec) == []


def test_cooperation_action_without_component(toy_text):
    text = toy_text.replace("<alpha>", "<alpha, omega>")
    messages = _messages(text)
    assert "system 'omega': action in cooperation set does not occur in any component" in messages


def test_shared_action_missing_from_cooperation_set(toy_text):
    messages = _messages(toy_text.replace("<alpha>", "<>"))
    assert (
        "system 'alpha': action occurs in both operands but is missing from the cooperation set"
        in messages
    )


def test_init_level_outside_range(toy_text):
    text = toy_text.replace("max = 3, init = 3", "max = 3, init = 5").replace("A[3]", "A[5]")
    assert "species 'A': init 5 is outside [0, 3]" in _messages(text)


def test_missing_rate(toy_text):
    assert "rate 'alpha': no rate defined" in _messages(toy_text.replace("rate alpha = MA(k);", ""))


def test_mass_action_constant_must_be_parameter(toy_text):
    messages = _messages(toy_text.replace("MA(k)", "MA(q)"))
    assert "rate 'alpha': mass-action constant 'q' is not a parameter" in messages


def test_unresolved_name_in_functional_rate(toy_text):
    assert "rate 'alpha': unresolved name 'Q'" in _messages(toy_text.replace("MA(k)", "k * Q"))


def test_read_species_must_take_part():
    text = """
    param k = 1.0;
    rate a = k * C;
    rate c = MA(k);
    delay a = 0.0;
    delay c = 0.0;
    species A : max = 2, init = 1;
    species C : max = 2, init = 1;
    A = (a, 1) << A;
    C = (c, 1) << C;
    system A[1] <> C[1];
    """
    messages = _messages(text)
    assert "rate 'a': species 'C' is read but does not take part (declare it as modifier)" in messages


def test_species_with_two_roles_for_one_action(toy_text):
    text = toy_text.replace("A = (alpha, 1) << A;", "A = (alpha, 1) << A + (alpha, 1) >> A;")
    messages = _messages(text)
    assert "component 'A': species takes part in action 'alpha' in more than one role" in messages


def test_negative_delay(toy_text):
    messages = _messages(toy_text.replace("delay alpha = 2.0;", "delay alpha = -1.0;"))
    assert "delay 'alpha': delay must be finite and non-negative, got -1.0" in messages


def test_non_positive_step(toy_text):
    messages = _messages(toy_text.replace("step = 1.0;", "step = 0.0;"))
    assert "step 'h': step size must be positive, got 0.0" in messages


def test_history_with_unknown_name(toy_text):
    messages = _messages(toy_text + "history A = 3.0 - s;\n")
    assert "history 'A': unresolved name 's'" in messages


@pytest.mark.parametrize(
    "old, new, message",
    [
        ("A[3]", "A[2]", "initial level of 'A' in system (2) differs from species declaration (3)"),
        ("A = (alpha, 1) << A;", "A = (alpha, 1) << B;", "only tail self-reference is supported"),
        ("param k = 0.5;", "param k = 0.5;\nparam k = 0.7;", "duplicate definition of param 'k'"),
    ],
)
def test_builder_errors(toy_text, old, new, message):
    messages = _messages(toy_text.replace(old, new))
    assert any(text.startswith(message) for text in messages)
