"""Tests für arithmetische Ausdrücke."""

import math

import pytest

from biopepad.core.expressions import (
    BinOp,
    Delayed,
    Neg,
    Num,
    Var,
    compile_expr,
    evaluate,
    expr_from_dict,
    expr_to_dict,
    format_expr,
    free_names,
    has_delayed,
    substitute,
)


@pytest.mark.parametrize(
    "expr, text",
    [
        (BinOp("*", BinOp("+", Var("a"), Var("b")), Var("c")), "(a + b)*c"),
        (BinOp("+", Var("a"), BinOp("*", Var("b"), Var("c"))), "a + b*c"),
        (BinOp("-", Var("a"), BinOp("-", Var("b"), Var("c"))), "a - (b - c)"),
        (BinOp("-", BinOp("-", Var("a"), Var("b")), Var("c")), "a - b - c"),
        (BinOp("^", Var("a"), BinOp("^", Var("b"), Var("c"))), "a^b^c"),
        (BinOp("^", BinOp("^", Var("a"), Var("b")), Var("c")), "(a^b)^c"),
        (Neg(BinOp("+", Var("a"), Var("b"))), "-(a + b)"),
        (Neg(Var("a")), "-a"),
        (Delayed("A", 2.0), "A(t-2.0)"),
        (Num(0.5), "0.5"),
    ],
)
def test_format_expr_uses_minimal_parentheses(expr, text):
    assert format_expr(expr) == text


def test_evaluate_binds_names_and_delayed_references():
    expr = BinOp("*", Var("k"), BinOp("+", Var("A"), Delayed("A", 1.5)))
    env = {"k": 2.0, "A": 3.0, ("A", 1.5): 1.0}
    assert evaluate(expr, env) == 8.0


def test_power_and_division():
    law = compile_expr(BinOp("/", BinOp("^", Var("x"), Num(2.0)), Var("y")))
    assert law({"x": 3.0, "y": 2.0}) == 4.5


def test_invalid_power_raises_value_error():
    with pytest.raises(ValueError):
        evaluate(BinOp("^", Num(-1.0), Num(0.5)), {})


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        evaluate(BinOp("/", Num(1.0), Var("x")), {"x": 0.0})


def test_missing_binding_raises_key_error():
    with pytest.raises(KeyError):
        evaluate(Var("unknown"), {})


def test_free_names_and_has_delayed():
    expr = BinOp("*", Var("k"), Neg(Delayed("A", 1.0)))
    assert free_names(expr) == frozenset({"k", "A"})
    assert has_delayed(expr)
    assert not has_delayed(BinOp("+", Var("k"), Num(1.0)))


def test_substitute_leaves_original_untouched():
    original = BinOp("*", Var("k"), Var("A"))
    replaced = substitute(original, lambda var: Delayed(var.name, 2.0) if var.name == "A" else var)
    assert replaced == BinOp("*", Var("k"), Delayed("A", 2.0))
    assert original == BinOp("*", Var("k"), Var("A"))


def test_tree_document_round_trip():
    expr = BinOp("-", Neg(Delayed("B", 0.25)), BinOp("^", Var("k"), Num(3.0)))
    assert expr_from_dict(expr_to_dict(expr)) == expr


def test_unknown_tree_node_is_rejected():
    with pytest.raises(ValueError):
        expr_from_dict({"call": "sin"})


def test_formatted_numbers_keep_full_precision():
    value = 0.1 + 0.2
    assert float(format_expr(Num(value))) == value
    assert math.isclose(evaluate(Num(value), {}), 0.30000000000000004)
