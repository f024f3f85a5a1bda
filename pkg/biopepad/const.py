"""
Konstantendeklarationen für das Bio-PEPAd Toolkit.

Status: COMPLETE
Version: 0.1.0
Letztes Update: 2026-10-12
"""

__version__ = "0.1.0"
__status__ = "testing"
__last_updated__ = "2026-10-12"

# Paketname, auch Präfix aller Logger
DOMAIN = "biopepad"
TOOL_VERSION = __version__

# Rollenoperatoren der konkreten Syntax
OP_REACTANT = "<<"
OP_PRODUCT = ">>"
OP_ACTIVATOR = "(+)"
OP_INHIBITOR = "(-)"
OP_MODIFIER = "(.)"

# Name der Zeitvariablen in History-Ausdrücken
TIME_VARIABLE = "t"

# Semantik-Optionen
CAPACITY_STRICT = "strict"
CAPACITY_LITERAL = "literal"
CAPACITY_MODES = [CAPACITY_STRICT, CAPACITY_LITERAL]

CANONICAL_RATE = "rate"
CANONICAL_EXACT = "exact"
CANONICAL_MODES = [CANONICAL_RATE, CANONICAL_EXACT]

# Standardwerte
DEFAULT_T0 = 0.0
DEFAULT_MAX_STATES = 100_000
DEFAULT_MAX_PENDING_PER_SPECIES = 64
DEFAULT_CAPACITY_MODE = CAPACITY_STRICT
DEFAULT_CANONICAL_MODE = CANONICAL_RATE
DEFAULT_RNG_ALGORITHM = "philox"
DEFAULT_OUTPUT_DIR = "out"

# Toleranzen
DELAY_GRID_TOLERANCE = 1e-9
MAX_STEP_REFINEMENT = 100_000

# Export-Formate
FORMAT_DOT = "dot"
FORMAT_JSON = "json"
FORMAT_TEXT = "text"

# Ereignis-Tags der Trajektorien
EVENT_INITIAL = "initial"
EVENT_START = "start"
EVENT_COMPLETE = "complete"
EVENT_GRID = "grid"

# Umgebungsvariablen
ENV_OUTPUT_DIR = "BIOPEPAD_OUTPUT_DIR"
ENV_LOG_LEVEL = "BIOPEPAD_LOG_LEVEL"

# Log-Levels
LOG_LEVEL_DEBUG = "debug"
LOG_LEVEL_INFO = "info"
LOG_LEVEL_WARNING = "warning"
LOG_LEVEL_ERROR = "error"

# Exit-Codes der Kommandozeile
EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2
EXIT_TRUNCATED = 3
EXIT_NUMERIC = 4
EXIT_USAGE = 64

# Verzeichnis für Logdateien
LOG_DIR = "logs"

# Dateiname des Manifests neben jeder Ausgabe
MANIFEST_FILENAME = "manifest.json"
