"""
Kanonische Textausgabe einer SystemSpec.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-14

``parse_model(serialize_model(spec))`` ergibt eine strukturell gleiche Spec.
Alle Zahlen werden mit ``repr`` ausgegeben, Verzögerungen immer explizit.
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-14"

from typing import List

from ..core.expressions import format_expr, format_number
from ..core.model import (
    Coop,
    MassAction,
    ProcessTree,
    RateExpr,
    SpeciesComponent,
    SystemSpec,
)


def format_rate(rate: RateExpr) -> str:
    if isinstance(rate, MassAction):
        return f"MA({rate.constant})"
    return format_expr(rate.expr)


def format_component(component: SpeciesComponent) -> str:
    behaviours = " + ".join(
        f"({term.action}, {term.stoich}) {term.role.value} {component.name}"
        for term in component.terms
    )
    return f"{component.name} = {behaviours}"


def format_process(tree: ProcessTree) -> str:
    """Gibt einen Prozessbaum aus; rechte Kooperationsoperanden werden geklammert."""
    if isinstance(tree, Coop):
        right = format_process(tree.right)
        if isinstance(tree.right, Coop):
            right = f"({right})"
        actions = ", ".join(sorted(tree.actions))
        return f"{format_process(tree.left)} <{actions}> {right}"
    return f"{tree.name}[{tree.level}]"


def serialize_model(spec: SystemSpec) -> str:
    """Erzeugt den kanonischen Modelltext.

    Args:
        spec: Gültige Spezifikation

    Returns:
        Modelltext mit ``;``-terminierten Anweisungen, eine pro Zeile
    """
    lines: List[str] = []
    for compartment in spec.compartments:
        lines.append(f"compartment {compartment.name} = {format_number(compartment.size)};")
    lines.append(f"step = {format_number(spec.step_size)};")
    for name, value in spec.params.items():
        lines.append(f"param {name} = {format_number(value)};")
    lines.append("")
    for action, rate in spec.rates.items():
        lines.append(f"rate {action} = {format_rate(rate)};")
    for action, delay in spec.delays.items():
        lines.append(f"delay {action} = {format_number(delay)};")
    lines.append("")
    for name, quantity in spec.quantities.items():
        lines.append(f"species {name} : max = {quantity.max_level}, init = {quantity.init_level};")
    for name, expr in spec.histories.items():
        lines.append(f"history {name} = {format_expr(expr)};")
    lines.append("")
    for component in spec.components.values():
        lines.append(f"{format_component(component)};")
    lines.append("")
    lines.append(f"system {format_process(spec.initial_process)};")
    return "\n".join(lines) + "\n"
