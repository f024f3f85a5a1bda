"""Tests für Listenfunktionen, Relationen und SLTS-Exploration."""

import json
import random
from collections import Counter, deque

import pytest

from biopepad.const import CANONICAL_EXACT, CAPACITY_LITERAL
from biopepad.core import Coop, RoleOp, ScheduleEntry, SpeciesState, stoichiometry_matrix
from biopepad.core.model import iter_leaves
from biopepad.exceptions import CorruptConfigurationError, ExplorationLimitError
from biopepad.parser import parse_model_strict
from biopepad.semantics import (
    ExplorationLimits,
    TransitionPhase,
    completion_transitions,
    explore_slts,
    mu,
    pending_count,
    phi,
    pi_products,
    render_slts,
    rho_levels,
    start_transitions,
    state_label,
    stochastic_transitions,
    to_dot,
    write_slts,
    zeta,
)
from biopepad.semantics.slts import levels

from .conftest import CYCLE_TEXT

SMALL_CYCLE_TEXT = CYCLE_TEXT.replace("30", "3")

TOY_LABELS = {
    "(3,0):0",
    "(2,0):1",
    "(2,1):0",
    "(1,0):2",
    "(1,1):1",
    "(1,2):0",
    "(0,0):3",
    "(0,1):2",
    "(0,2):1",
    "(0,3):0",
}

SCHEDULE = (
    ScheduleEntry(3, 1, "a", RoleOp.REACTANT),
    ScheduleEntry(2, 2, "b", RoleOp.PRODUCT),
    ScheduleEntry(1, 1, "a", RoleOp.PRODUCT),
)


def test_list_functions():
    assert phi("a", SCHEDULE) == SCHEDULE[0]
    assert phi("c", SCHEDULE) is None
    assert zeta("a", SCHEDULE) == SCHEDULE[1:]
    assert zeta("c", SCHEDULE) == SCHEDULE
    assert pi_products(SCHEDULE) == SCHEDULE[1:]
    assert rho_levels(SCHEDULE) == 4


def test_fifo_law_against_reference_queue():
    rng = random.Random(2024)
    schedule = ()
    reference = {"a": deque(), "b": deque()}
    for step in range(2000):
        action = rng.choice("ab")
        if rng.random() < 0.55:
            entry = ScheduleEntry(step, rng.randint(1, 3), action, rng.choice([RoleOp.REACTANT, RoleOp.PRODUCT]))
            schedule = schedule + (entry,)
            reference[action].append(entry)
        else:
            expected = reference[action][0] if reference[action] else None
            assert phi(action, schedule) == expected
            schedule = zeta(action, schedule)
            if expected is not None:
                reference[action].popleft()
        for name, queue in reference.items():
            assert [entry for entry in schedule if entry.action == name] == list(queue)
        assert len(schedule) == len(reference["a"]) + len(reference["b"])


def test_mu_initialises_empty_schedules(toy_spec):
    cfg = mu(toy_spec.initial_process)
    assert cfg == Coop(SpeciesState("A", 3), SpeciesState("B", 0), frozenset({"alpha"}))
    assert state_label(cfg) == "(3,0):0"


def test_start_appends_entries_on_both_sides(toy_spec):
    derivations = start_transitions(mu(toy_spec.initial_process), toy_spec)
    assert len(derivations) == 1
    successor = derivations[0].successor
    assert successor.left == SpeciesState("A", 2, (ScheduleEntry(3, 1, "alpha", RoleOp.REACTANT),))
    assert successor.right == SpeciesState("B", 0, (ScheduleEntry(0, 1, "alpha", RoleOp.PRODUCT),))
    assert [entry.species for entry in derivations[0].ctx] == ["A", "B"]
    assert pending_count(successor) == 1


def test_completion_adds_products_and_clears_entries(toy_spec):
    started = start_transitions(mu(toy_spec.initial_process), toy_spec)[0].successor
    completions = completion_transitions(started, toy_spec)
    assert len(completions) == 1
    assert completions[0].successor == Coop(
        SpeciesState("A", 2), SpeciesState("B", 1), frozenset({"alpha"})
    )


def test_completion_with_one_sided_pending_is_corrupt(toy_spec):
    cfg = Coop(
        SpeciesState("A", 2, (ScheduleEntry(3, 1, "alpha", RoleOp.REACTANT),)),
        SpeciesState("B", 0),
        frozenset({"alpha"}),
    )
    with pytest.raises(CorruptConfigurationError):
        completion_transitions(cfg, toy_spec)


def test_stochastic_labels(toy_spec):
    transitions = stochastic_transitions(toy_spec, mu(toy_spec.initial_process))
    assert len(transitions) == 1
    label, _ = transitions[0]
    assert label.phase is TransitionPhase.START
    assert (label.rate, label.delay) == (pytest.approx(1.5), 2.0)
    assert str(label) == "alpha+"


def test_synchronised_starts_in_cell_cycle(cell_cycle_spec):
    transitions = stochastic_transitions(cell_cycle_spec, mu(cell_cycle_spec.initial_process))
    rates = {label.action: label.rate for label, _ in transitions}
    assert rates == pytest.approx({"alpha": 50.0, "beta": 6.0, "gamma": 5.0, "delta": 1.0})
    beta = next(cfg for label, cfg in transitions if label.action == "beta")
    assert beta.left.schedule == (ScheduleEntry(100, 2, "beta", RoleOp.PRODUCT),)
    assert beta.right.level == 19


def test_zero_rate_starts_are_omitted(toy_text):
    spec = parse_model_strict(toy_text.replace("param k = 0.5;", "param k = 0.0;"))
    assert stochastic_transitions(spec, mu(spec.initial_process)) == []
    slts = explore_slts(spec)
    assert (slts.num_states, slts.num_transitions) == (1, 0)


def test_explore_toy(toy_spec):
    slts = explore_slts(toy_spec)
    assert not slts.truncated
    assert (slts.num_states, slts.num_transitions) == (10, 12)
    assert slts.summary() == "10 states, 12 transitions"
    phases = [label.phase for _, label, _ in slts.edges()]
    assert phases.count(TransitionPhase.START) == 6
    assert phases.count(TransitionPhase.COMPLETE) == 6
    assert slts.labels()[0] == "(3,0):0"
    assert len(slts.labels()) == 10
    assert set(slts.labels()) == TOY_LABELS


def test_completion_consumes_older_entry(toy_spec):
    slts = explore_slts(toy_spec)
    state_id = slts.labels().index("(1,0):2")
    cfg = slts.state(state_id)
    assert [entry.level for entry in cfg.left.schedule] == [3, 2]

    [derivation] = completion_transitions(cfg, toy_spec)
    assert derivation.successor.left.schedule == cfg.left.schedule[1:]
    assert derivation.successor.right.schedule == cfg.right.schedule[1:]
    assert state_label(derivation.successor) == "(1,1):1"

    [(label, target)] = [
        (label, target)
        for label, target in slts.outgoing(state_id)
        if label.phase is TransitionPhase.COMPLETE
    ]
    assert slts.labels()[target] == "(1,1):1"
    assert label.rate == pytest.approx(1.5)


def test_pending_state_has_start_and_completion_rates(toy_spec):
    slts = explore_slts(toy_spec)
    cfg = slts.state(slts.labels().index("(2,0):1"))
    rates = {label.phase: label.rate for label, _ in stochastic_transitions(toy_spec, cfg)}
    assert rates == pytest.approx({TransitionPhase.START: 1.0, TransitionPhase.COMPLETE: 1.5})


def test_absorbing_state_has_no_transitions(toy_spec):
    slts = explore_slts(toy_spec)
    cfg = slts.state(slts.labels().index("(0,3):0"))
    assert stochastic_transitions(toy_spec, cfg) == []


@pytest.fixture(params=["toy", "toy_tight", "small_cycle"])
def explored(request, toy_text):
    text = {
        "toy": toy_text,
        "toy_tight": toy_text.replace("species B : max = 3", "species B : max = 1"),
        "small_cycle": SMALL_CYCLE_TEXT,
    }[request.param]
    spec = parse_model_strict(text)
    slts = explore_slts(spec)
    assert not slts.truncated
    return spec, slts


def test_edges_conserve_levels(explored):
    spec, slts = explored
    for source, label, target in slts.edges():
        before = {leaf.name: leaf for leaf in iter_leaves(slts.state(source))}
        after = {leaf.name: leaf for leaf in iter_leaves(slts.state(target))}
        roles = dict(spec.participants(label.action))
        for name, leaf in before.items():
            term = roles.get(name)
            successor = after[name]
            if term is None:
                assert successor.level == leaf.level
                assert len(successor.schedule) == len(leaf.schedule)
            elif label.phase is TransitionPhase.START:
                consumed = term.stoich if term.role is RoleOp.REACTANT else 0
                assert successor.level == leaf.level - consumed
                assert len(successor.schedule) == len(leaf.schedule) + 1
            else:
                entry = phi(label.action, leaf.schedule)
                produced = entry.stoich if term.role is RoleOp.PRODUCT else 0
                assert successor.level == leaf.level + produced
                assert len(successor.schedule) == len(leaf.schedule) - 1


def test_states_respect_level_bounds(explored):
    spec, slts = explored
    for _, cfg in slts.states():
        for leaf in iter_leaves(cfg):
            max_level = spec.quantities[leaf.name].max_level
            assert 0 <= leaf.level <= max_level
            assert leaf.level + rho_levels(pi_products(leaf.schedule)) <= max_level


def _pending_per_action(spec, cfg):
    pending = {}
    for action in spec.actions:
        names = {name for name, _ in spec.participants(action)}
        counts = {
            Counter(entry.action for entry in leaf.schedule)[action]
            for leaf in iter_leaves(cfg)
            if leaf.name in names
        }
        assert len(counts) == 1
        pending[action] = counts.pop()
    return pending


def test_completions_never_outnumber_starts(explored):
    spec, slts = explored
    pending = {state_id: _pending_per_action(spec, cfg) for state_id, cfg in slts.states()}
    assert set(pending[slts.initial].values()) == {0}
    for source, label, target in slts.edges():
        step = 1 if label.phase is TransitionPhase.START else -1
        expected = dict(pending[source])
        expected[label.action] += step
        assert expected[label.action] >= 0
        assert pending[target] == expected


def _reaction_graph(spec):
    names = [leaf.name for leaf in iter_leaves(spec.initial_process)]
    max_levels = [spec.quantities[name].max_level for name in names]
    matrix = stoichiometry_matrix(spec)
    initial = tuple(leaf.level for leaf in iter_leaves(spec.initial_process))
    edges, seen, queue = set(), {initial}, deque([initial])
    while queue:
        state = queue.popleft()
        for action in spec.actions:
            column = matrix.column(action)
            target = tuple(level + column.get(name, 0) for level, name in zip(state, names))
            if any(not 0 <= level <= bound for level, bound in zip(target, max_levels)):
                continue
            edges.add((state, action, target))
            if target not in seen:
                seen.add(target)
                queue.append(target)
    return edges


def test_zero_delay_contraction_matches_reaction_graph():
    spec = parse_model_strict(SMALL_CYCLE_TEXT)
    slts = explore_slts(spec)
    assert not slts.truncated
    contracted = set()
    for source, cfg in slts.states():
        if any(leaf.schedule for leaf in iter_leaves(cfg)):
            continue
        for label, middle in slts.outgoing(source):
            assert label.phase is TransitionPhase.START
            assert label.delay == 0.0
            [(closing, target)] = [
                (closing, target)
                for closing, target in slts.outgoing(middle)
                if closing.phase is TransitionPhase.COMPLETE
            ]
            assert closing.action == label.action
            settled = slts.state(target)
            assert not any(leaf.schedule for leaf in iter_leaves(settled))
            contracted.add((levels(cfg), label.action, levels(settled)))
    assert contracted == _reaction_graph(spec)


def test_exact_canonical_mode_distinguishes_more_states(toy_spec):
    slts = explore_slts(toy_spec, canonical=CANONICAL_EXACT)
    assert slts.num_states > 10


def test_unknown_canonical_mode(toy_spec):
    with pytest.raises(ValueError):
        explore_slts(toy_spec, canonical="fuzzy")


def test_product_capacity_blocks_starts(toy_text):
    spec = parse_model_strict(toy_text.replace("species B : max = 3", "species B : max = 1"))
    strict = explore_slts(spec)
    assert (strict.num_states, strict.num_transitions) == (3, 2)
    literal = explore_slts(spec, capacity=CAPACITY_LITERAL)
    assert (literal.num_states, literal.num_transitions) == (6, 6)


def test_truncation_by_state_limit(toy_spec):
    slts = explore_slts(toy_spec, ExplorationLimits(max_states=4))
    assert slts.truncated
    assert slts.num_states == 4
    assert slts.summary().endswith("[truncated: max_states]")


def test_truncation_by_pending_limit(toy_spec):
    slts = explore_slts(toy_spec, ExplorationLimits(max_pending_per_species=1))
    assert slts.truncated
    assert slts.truncation_reason == "max_pending"
    assert slts.truncation_action == "alpha"


def test_strict_exploration_raises(toy_spec):
    with pytest.raises(ExplorationLimitError):
        explore_slts(toy_spec, ExplorationLimits(max_states=4), strict=True)


def test_dot_export(toy_spec):
    dot = to_dot(explore_slts(toy_spec))
    assert dot.startswith("digraph slts {")
    assert 's0 [label="(3,0):0", penwidth=2];' in dot
    assert "style=solid" in dot and "style=dashed" in dot
    assert 'label="alpha+ r=1.5 d=2.0"' in dot


def test_json_export(toy_spec, tmp_path):
    slts = explore_slts(toy_spec)
    path = write_slts(slts, tmp_path / "slts.json", "json")
    document = json.loads(path.read_text(encoding="utf-8"))
    assert document["species"] == ["A", "B"]
    assert len(document["states"]) == 10
    assert {edge["phase"] for edge in document["edges"]} == {"start", "complete"}
    assert document["truncated"] is False


def test_unknown_export_format(toy_spec):
    with pytest.raises(ValueError):
        render_slts(explore_slts(toy_spec), "svg")
