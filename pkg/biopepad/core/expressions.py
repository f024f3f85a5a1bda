"""
Arithmetische Ausdrücke für funktionale Raten und History-Funktionen.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-13

Ein Ausdruck ist ein unveränderlicher Baum aus Zahlen, Namen, verzögerten
Speziesreferenzen, unärem Minus und binären Operatoren (+, -, *, /, ^).
Der Baum wird sowohl vom Parser erzeugt als auch von der DDE-Übersetzung
umgeschrieben; Auswertung erfolgt über vorkompilierte Closures.

Abhängigkeiten:
  - math
  - dataclasses
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-13"

import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, FrozenSet, Mapping, Union


@dataclass(frozen=True)
class Num:
    """Numerisches Literal."""
    value: float


@dataclass(frozen=True)
class Var:
    """Referenz auf einen Parameter, eine Spezies oder die Zeit ``t``."""
    name: str


@dataclass(frozen=True)
class Delayed:
    """Speziesreferenz mit Auswertungsversatz: ``x_S(t - delay)``."""
    name: str
    delay: float


@dataclass(frozen=True)
class Neg:
    """Unäres Minus."""
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    """Binärer Operator ``left op right`` mit op aus ``+ - * / ^``."""
    op: str
    left: "Expr"
    right: "Expr"


Expr = Union[Num, Var, Delayed, Neg, BinOp]

BINARY_OPERATORS = ("+", "-", "*", "/", "^")

_PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2, "^": 4}
_NEG_PRECEDENCE = 3
_ATOM_PRECEDENCE = 5


def _power(base: float, exponent: float) -> float:
    # math.pow wirft ValueError statt komplexe Zahlen zu liefern
    return math.pow(base, exponent)


def free_names(expr: Expr) -> FrozenSet[str]:
    """Gibt alle freien Namen eines Ausdrucks zurück.

    Verzögerte Referenzen zählen mit ihrem Speziesnamen.
    """
    if isinstance(expr, (Var, Delayed)):
        return frozenset([expr.name])
    if isinstance(expr, Num):
        return frozenset()
    if isinstance(expr, Neg):
        return free_names(expr.operand)
    return free_names(expr.left) | free_names(expr.right)


def has_delayed(expr: Expr) -> bool:
    """Prüft, ob der Ausdruck verzögerte Referenzen enthält."""
    if isinstance(expr, Delayed):
        return True
    if isinstance(expr, Neg):
        return has_delayed(expr.operand)
    if isinstance(expr, BinOp):
        return has_delayed(expr.left) or has_delayed(expr.right)
    return False


def substitute(expr: Expr, replace: Callable[[Var], Expr]) -> Expr:
    """Ersetzt jede Namensreferenz durch ``replace(var)``.

    Args:
        expr: Ursprünglicher Ausdruck
        replace: Abbildung für Namensreferenzen

    Returns:
        Neuer Ausdruck; der ursprüngliche bleibt unverändert
    """
    if isinstance(expr, Var):
        return replace(expr)
    if isinstance(expr, Neg):
        return Neg(substitute(expr.operand, replace))
    if isinstance(expr, BinOp):
        return BinOp(expr.op, substitute(expr.left, replace), substitute(expr.right, replace))
    return expr


def compile_expr(expr: Expr) -> Callable[[Mapping[Any, float]], float]:
    """Übersetzt einen Ausdruck in eine Closure über einer Umgebung.

    Namen werden unter ihrem Namen nachgeschlagen, verzögerte Referenzen
    unter dem Schlüssel ``(name, delay)``.

    Raises (bei Aufruf):
        KeyError: Wenn eine Bindung fehlt
        ArithmeticError, ValueError: Bei Division durch Null oder ungültiger Potenz
    """
    if isinstance(expr, Num):
        value = expr.value
        return lambda env: value
    if isinstance(expr, Var):
        name = expr.name
        return lambda env: env[name]
    if isinstance(expr, Delayed):
        key = (expr.name, expr.delay)
        return lambda env: env[key]
    if isinstance(expr, Neg):
        inner = compile_expr(expr.operand)
        return lambda env: -inner(env)

    left = compile_expr(expr.left)
    right = compile_expr(expr.right)
    if expr.op == "+":
        return lambda env: left(env) + right(env)
    if expr.op == "-":
        return lambda env: left(env) - right(env)
    if expr.op == "*":
        return lambda env: left(env) * right(env)
    if expr.op == "/":
        return lambda env: left(env) / right(env)
    if expr.op == "^":
        return lambda env: _power(left(env), right(env))
    raise ValueError(f"Unbekannter Operator: {expr.op}")


def evaluate(expr: Expr, env: Mapping[Any, float]) -> float:
    """Wertet einen Ausdruck direkt aus (ohne Zwischenspeicherung)."""
    return compile_expr(expr)(env)


def _precedence(expr: Expr) -> int:
    if isinstance(expr, BinOp):
        return _PRECEDENCE[expr.op]
    if isinstance(expr, Neg):
        return _NEG_PRECEDENCE
    if isinstance(expr, Num) and (expr.value < 0 or math.copysign(1.0, expr.value) < 0):
        return _NEG_PRECEDENCE
    return _ATOM_PRECEDENCE


def _wrap(text: str, needed: bool) -> str:
    return f"({text})" if needed else text


def format_number(value: float) -> str:
    """Formatiert eine Zahl mit voller Round-Trip-Genauigkeit."""
    return repr(float(value))


def format_expr(expr: Expr) -> str:
    """Gibt einen Ausdruck mit minimaler Klammerung aus.

    Die Klammerung erhält die Baumstruktur: erneutes Parsen liefert
    denselben Baum. Verzögerte Referenzen werden als ``X(t-d)`` ausgegeben.
    """
    if isinstance(expr, Num):
        return format_number(expr.value)
    if isinstance(expr, Var):
        return expr.name
    if isinstance(expr, Delayed):
        return f"{expr.name}(t-{format_number(expr.delay)})"
    if isinstance(expr, Neg):
        inner = expr.operand
        needed = _precedence(inner) < _NEG_PRECEDENCE or isinstance(inner, Neg) or (
            isinstance(inner, Num) and _precedence(inner) == _NEG_PRECEDENCE
        )
        return "-" + _wrap(format_expr(inner), needed)

    prec = _PRECEDENCE[expr.op]
    left_prec = _precedence(expr.left)
    right_prec = _precedence(expr.right)
    if expr.op == "^":
        # rechtsassoziativ
        left_needed = left_prec <= prec
        right_needed = right_prec < prec
    else:
        left_needed = left_prec < prec
        right_needed = right_prec <= prec
    left = _wrap(format_expr(expr.left), left_needed)
    right = _wrap(format_expr(expr.right), right_needed)
    if expr.op in ("*", "/", "^"):
        return f"{left}{expr.op}{right}"
    return f"{left} {expr.op} {right}"


def expr_to_dict(expr: Expr) -> Dict[str, Any]:
    """Konvertiert einen Ausdruck in einen JSON-fähigen Baum."""
    if isinstance(expr, Num):
        return {"num": expr.value}
    if isinstance(expr, Var):
        return {"var": expr.name}
    if isinstance(expr, Delayed):
        return {"delayed": expr.name, "delay": expr.delay}
    if isinstance(expr, Neg):
        return {"neg": expr_to_dict(expr.operand)}
    return {"op": expr.op, "left": expr_to_dict(expr.left), "right": expr_to_dict(expr.right)}


def expr_from_dict(data: Mapping[str, Any]) -> Expr:
    """Erstellt einen Ausdruck aus seiner Baumdarstellung.

    Raises:
        ValueError: Wenn der Knoten unbekannt ist
    """
    if "num" in data:
        return Num(float(data["num"]))
    if "var" in data:
        return Var(str(data["var"]))
    if "delayed" in data:
        return Delayed(str(data["delayed"]), float(data["delay"]))
    if "neg" in data:
        return Neg(expr_from_dict(data["neg"]))
    if data.get("op") in BINARY_OPERATORS:
        return BinOp(data["op"], expr_from_dict(data["left"]), expr_from_dict(data["right"]))
    raise ValueError(f"Unbekannter Ausdrucksknoten: {data}")
