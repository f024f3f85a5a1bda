"""Gemeinsame Fixtures für die Bio-PEPAd-Tests."""

from pathlib import Path

import pytest

from biopepad.parser import parse_model_strict

MODELS_DIR = Path(__file__).resolve().parents[2] / "models"

TOY_PATH = MODELS_DIR / "toy.biopepad"
CELL_CYCLE_PATH = MODELS_DIR / "cell_cycle.biopepad"

# Drei Reaktionen im Kreis ohne Verzögerung; die Gesamtzahl bleibt 30.
CYCLE_TEXT = """
param k1 = 1.0;
param k2 = 0.7;
param k3 = 0.4;
rate r1 = MA(k1);
rate r2 = MA(k2);
rate r3 = MA(k3);
delay r1 = 0.0;
delay r2 = 0.0;
delay r3 = 0.0;
species X : max = 30, init = 30;
species Y : max = 30, init = 0;
species Z : max = 30, init = 0;
X = (r1, 1) << X + (r3, 1) >> X;
Y = (r1, 1) >> Y + (r2, 1) << Y;
Z = (r2, 1) >> Z + (r3, 1) << Z;
system X[30] <r1, r3> (Y[0] <r2> Z[0]);
"""

# dx/dt = -x(t-1) mit x = 1 auf [-1, 0]
BENCHMARK_TEXT = """
param k = 1.0;
rate decay = MA(k);
delay decay = 1.0;
species x : max = 10, init = 1;
x = (decay, 1) << x;
system x[1];
"""


def cell_cycle_text(**overrides) -> str:
    """Zellzyklus-Modell mit überschriebenen Zeilen (z.B. ``delay_alpha="0.0"``)."""
    text = CELL_CYCLE_PATH.read_text(encoding="utf-8")
    for key, value in overrides.items():
        kind, name = key.split("_", 1)
        lines = []
        for line in text.splitlines():
            if line.startswith(f"{kind} {name} ="):
                line = f"{kind} {name} = {value};"
            lines.append(line)
        text = "\n".join(lines) + "\n"
    return text


@pytest.fixture
def toy_text() -> str:
    return TOY_PATH.read_text(encoding="utf-8")


@pytest.fixture
def toy_spec(toy_text):
    return parse_model_strict(toy_text, origin="toy")


@pytest.fixture
def cell_cycle_spec():
    return parse_model_strict(CELL_CYCLE_PATH.read_text(encoding="utf-8"), origin="cell_cycle")


@pytest.fixture
def cycle_spec():
    return parse_model_strict(CYCLE_TEXT, origin="cycle")


@pytest.fixture
def benchmark_spec():
    return parse_model_strict(BENCHMARK_TEXT, origin="benchmark")
