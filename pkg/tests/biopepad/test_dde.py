"""Tests für die DDE-Ableitung und die Method-of-Steps-Integration."""

import json
import logging
import math

import numpy as np
import pytest
import sympy

from biopepad.core.expressions import Num
from biopepad.dde import (
    MethodOfStepsSolver,
    compatible_step,
    derive_dde,
    import_dde_json,
    render_dde,
    solution_csv,
    solve_dde,
    to_text,
)
from biopepad.dde import solver as solver_module
from biopepad.exceptions import IntegrationError, StepSizeError
from biopepad.parser import parse_model_strict

from .conftest import cell_cycle_text

t = sympy.Symbol("t")


def _f(name, arg):
    return sympy.Function(name)(arg)


class TestDerivation:
    def test_toy_equations(self, toy_spec):
        system = derive_dde(toy_spec)
        k = sympy.Symbol("k")
        assert system.equation_terms("A") == frozenset({-k * _f("A", t - 2)})
        assert system.equation_terms("B") == frozenset({k * _f("A", t - 2)})
        assert system.format_equation("A") == "dA/dt = -(k*A(t-2.0))"

    def test_cell_cycle_equations(self, cell_cycle_spec):
        system = derive_dde(cell_cycle_spec)
        a1, a4, d2, d3 = sympy.symbols("a1 a4 d2 d3")
        assert system.equation_terms("T_I") == frozenset(
            {-a1 * _f("T_I", t - 1), 2 * a4 * _f("T_M", t), -d2 * _f("T_I", t)}
        )
        assert system.equation_terms("T_M") == frozenset(
            {a1 * _f("T_I", t - 1), -a4 * _f("T_M", t), -d3 * _f("T_M", t)}
        )

    def test_zero_delay_leaves_law_undelayed(self):
        system = derive_dde(parse_model_strict(cell_cycle_text(delay_alpha="0.0")))
        a1 = sympy.Symbol("a1")
        assert a1 * _f("T_I", t) in system.equation_terms("T_M")

    def test_default_and_custom_histories(self, toy_spec, toy_text):
        system = derive_dde(toy_spec)
        assert system.histories == {"A": Num(3.0), "B": Num(0.0)}
        assert system.custom_histories == ()
        custom = derive_dde(parse_model_strict(toy_text + "history A = 3.0 - t;\n"))
        assert custom.custom_histories == ("A",)

    def test_initial_values(self, toy_spec, toy_text):
        assert derive_dde(toy_spec).initial_values() == {"A": 3.0, "B": 0.0}
        custom = derive_dde(parse_model_strict(toy_text + "history B = 1.5 + t;\n"))
        assert custom.initial_values() == {"A": 3.0, "B": 1.5}

    def test_delay_summary(self, cell_cycle_spec):
        system = derive_dde(cell_cycle_spec)
        assert system.max_delay == 1.0
        assert system.distinct_delays == [1.0]


class TestExport:
    def test_text(self, cell_cycle_spec):
        lines = to_text(derive_dde(cell_cycle_spec)).splitlines()
        assert len(lines) == 2
        assert lines[0].startswith("dT_I/dt = ")
        assert lines[1].startswith("dT_M/dt = ")

    def test_json_round_trip(self, cell_cycle_spec):
        system = derive_dde(cell_cycle_spec)
        document = render_dde(system, "json")
        assert json.loads(document)["variables"] == ["T_I", "T_M"]
        assert import_dde_json(document) == system

    def test_invalid_document(self):
        with pytest.raises(ValueError):
            import_dde_json({"variables": ["A"]})

    def test_unknown_format(self, toy_spec):
        with pytest.raises(ValueError):
            render_dde(derive_dde(toy_spec), "latex")


class TestCompatibleStep:
    @pytest.mark.parametrize(
        "step, delays, expected",
        [
            (0.3, [1.0], 0.25),
            (0.5, [1.0, 1.5], 0.5),
            (0.1, [], 0.1),
            (0.1, [0.0], 0.1),
            (0.3, [1.0, 0.7], 0.1),
        ],
    )
    def test_divides_every_delay(self, step, delays, expected):
        assert compatible_step(step, delays) == pytest.approx(expected)

    @pytest.mark.parametrize("step", [0.0, -0.1, math.inf])
    def test_rejects_invalid_step(self, step):
        with pytest.raises(StepSizeError):
            compatible_step(step, [1.0])


class TestSolver:
    def test_benchmark_is_exact(self, benchmark_spec):
        grid = solve_dde(derive_dde(benchmark_spec), 2.0, 0.1)
        assert grid.value_at(1.0, "x") == pytest.approx(0.0, abs=1e-9)
        assert grid.value_at(2.0, "x") == pytest.approx(-0.5, abs=1e-9)

    def test_fourth_order_convergence(self, benchmark_spec):
        system = derive_dde(benchmark_spec)
        history = lambda s: np.array([math.cos(s)])  # noqa: E731
        exact = math.cos(1.0) - 1.0
        coarse = solve_dde(system, 2.0, 0.1, history=history).value_at(2.0, "x")
        fine = solve_dde(system, 2.0, 0.05, history=history).value_at(2.0, "x")
        assert fine == pytest.approx(exact, abs=1e-6)
        ratio = abs(coarse - exact) / abs(fine - exact)
        assert 8.0 <= ratio <= 32.0

    def test_undelayed_decay_matches_exponential(self, toy_text):
        spec = parse_model_strict(toy_text.replace("delay alpha = 2.0;", "delay alpha = 0.0;"))
        grid = solve_dde(derive_dde(spec), 4.0, 0.01)
        assert grid.value_at(4.0, "A") == pytest.approx(3.0 * math.exp(-2.0), rel=1e-8)

    def test_custom_history_sets_initial_value(self, toy_text):
        system = derive_dde(parse_model_strict(toy_text + "history B = 1.5 + t;\n"))
        grid = solve_dde(system, 1.0, 0.5)
        assert grid.value_at(0.0, "B") == 1.5
        assert grid.value_at(-1.0, "B") == 0.5

    def test_interpolants_are_built_once_per_interval(self, benchmark_spec, monkeypatch):
        built = []
        original = solver_module.CubicHermiteSpline

        def counting(x, y, dydx, **kwargs):
            built.append(tuple(x))
            return original(x, y, dydx, **kwargs)

        monkeypatch.setattr(solver_module, "CubicHermiteSpline", counting)
        grid = solve_dde(derive_dde(benchmark_spec), 2.0, 0.1)
        assert len(built) == 10
        assert len(set(built)) == 10
        assert grid.value_at(2.0, "x") == pytest.approx(-0.5, abs=1e-9)

    def test_reused_solver_starts_fresh(self, benchmark_spec):
        system = derive_dde(benchmark_spec)
        solver = MethodOfStepsSolver(system)
        solver.solve(2.0, 0.1)
        again = solver.solve(2.0, 0.05)
        np.testing.assert_array_equal(again.values, solve_dde(system, 2.0, 0.05).values)

    def test_toy_total_is_conserved(self, toy_spec):
        grid = solve_dde(derive_dde(toy_spec), 10.0, 0.5)
        np.testing.assert_allclose(grid.values.sum(axis=1), 3.0)

    def test_history_segment(self, toy_spec):
        grid = solve_dde(derive_dde(toy_spec), 3.0, 0.5)
        assert grid.segments[:4] == ["history"] * 4
        assert grid.segments[4] == "solution"
        assert grid.times[0] == -2.0
        np.testing.assert_array_equal(grid.values[:4], [[3.0, 0.0]] * 4)

    def test_step_adjustment_is_logged(self, toy_spec, caplog):
        caplog.set_level(logging.INFO, logger="biopepad.dde")
        grid = solve_dde(derive_dde(toy_spec), 2.0, 0.3)
        assert grid.step == pytest.approx(2.0 / 7)
        assert any("Schrittweite angepasst" in record.getMessage() for record in caplog.records)

    def test_end_before_start(self, toy_spec):
        with pytest.raises(ValueError):
            solve_dde(derive_dde(toy_spec), -1.0, 0.1)

    def test_failing_law_raises_integration_error(self, toy_text):
        spec = parse_model_strict(toy_text.replace("MA(k)", "k / (A - 3.0)"))
        with pytest.raises(IntegrationError):
            solve_dde(derive_dde(spec), 1.0, 0.1)

    def test_solution_csv(self, toy_spec):
        lines = solution_csv(solve_dde(derive_dde(toy_spec), 1.0, 0.5)).splitlines()
        assert lines[0] == "time,segment,A,B"
        assert lines[1] == "-2.0,history,3.0,0.0"
        assert lines[5] == "0.0,solution,3.0,0.0"
