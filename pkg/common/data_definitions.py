from os import environ as env

from dotenv import find_dotenv, load_dotenv

load_dotenv(find_dotenv())

# Largest number of raw wirings (2m+k)! an enumeration may visit
ENUMERATION_BUDGET = int(env.get("CHORD_ENUMERATION_BUDGET", 362880))

# The canonical form minimizes over all 2^m * m! chord preserving relabelings
CANONICAL_MAX_CHORDS = int(env.get("CHORD_CANONICAL_MAX_CHORDS", 6))

# delta_tangle(n) has (n+1)! terms
DELTA_MAX_N = int(env.get("CHORD_DELTA_MAX_N", 4))

CONNECTION_MAX_SIZE = int(env.get("CHORD_CONNECTION_MAX_SIZE", 400))

DEFAULT_SEED = int(env.get("CHORD_DEFAULT_SEED", 0))

OUTPUT_FORMATS = ("json", "tsv")

# Exit codes of the management commands besides 0, see FORMATS.md
EXIT_CHECK_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_VALIDATION_ERROR = 3

DIAGRAM_KIND = "diagram"
TANGLE_KIND = "tangle"
QUANTUM_TANGLE_KIND = "quantum-tangle"
SYM_TENSOR_KIND = "sym-tensor"
LIE_KIND = "lie"
