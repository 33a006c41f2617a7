"""
Configuration file for the Reversible CA toolkit
Centralized settings for the oracle, synthesis, counting and the HTTP API
"""

import os

# --- Oracle Configuration ---
# Largest cell count the brute-force state transition graph accepts
# (two arrays of 2^n entries are allocated)
MAX_ORACLE_CELLS = 24

# Number of states evaluated per chunk when building a state transition graph
ORACLE_CHUNK_SIZE = 1 << 16

# Worker threads used to evaluate chunks concurrently
ORACLE_WORKERS = 4

# Fraction of currently available memory (psutil) a single graph may use
ORACLE_MEMORY_HEADROOM = 0.5

# --- Counting Configuration ---
# Exhaustive counting enumerates 256^n vectors; keep n small
MAX_COUNT_CELLS = 4

# --- Synthesis Configuration ---
# Default method: 'tree' (reachability-tree construction) or 'classwalk' (class tables)
DEFAULT_SYNTHESIS_METHOD = 'classwalk'

# Emit boundary rules with random don't-care bits instead of the canonical zeroed form
RANDOMIZE_DONTCARES = False

# Width in bits of seeds generated when none is supplied
SEED_BITS = 32

# --- Evolution Configuration ---
# Upper bound on steps for a single evolve request
MAX_EVOLVE_STEPS = 100000

# --- HTTP API Configuration ---
API_HOST = '0.0.0.0'
API_PORT = int(os.environ.get('PORT', 5000))

# Largest cell count accepted by the /api/stg route
MAX_API_CELLS = 16

# Largest cell count accepted by the /api/synthesize route
MAX_API_SYNTHESIS_CELLS = 100000

# Number of recent requests kept in the run history
HISTORY_SIZE = 50

# --- Logging Configuration ---
LOG_LEVEL = os.environ.get('LOG_LEVEL', 'WARNING')

# Per-level trace of the reachability walk (set to False for production)
DEBUG_REACHABILITY = False
