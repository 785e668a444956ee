"""
settings.py - Engine constants for the generic rigidity toolkit.

All configurable values live here so they're easy to tweak
and easy to reference from any module.
"""

# ── Prime fields ──────────────────────────────────────────
MODULUS_M61 = (1 << 61) - 1        # Mersenne prime 2^61 - 1
MODULUS_ALT = (1 << 62) - 57       # largest prime below 2^62
MODULI = {
    "m61": MODULUS_M61,
    "alt": MODULUS_ALT,
}
DEFAULT_MODULUS_NAME = "m61"
MODULUS = MODULI[DEFAULT_MODULUS_NAME]

# ── Randomisation ─────────────────────────────────────────
DEFAULT_SEED = 0
DEFAULT_TRIALS = 3                 # rank trials (max over frameworks)
GLOBAL_TRIALS = 5                  # stress-matrix trials for global rigidity

# ── Reconstructibility search ─────────────────────────────
SEPARATOR_MIN_SIZE = 3             # overlap must have >= 3 vertices
SEPARATOR_MAX_SIZE = 5
SEPARATOR_SEARCH_LIMIT = 20_000    # candidate subsets examined per graph
CLASSIFY_MAX_DEPTH = 4             # nesting of rule-3 decompositions

# ── Brute-force oracles ───────────────────────────────────
BRUTE_COMPONENTS_MAX_EDGES = 20
BRUTE_CIRCUITS_MAX_EDGES = 12
ORACLE_CORPUS_MAX_EDGES = 12

# ── Default corpus ────────────────────────────────────────
CORPUS_MAX_VERTICES = 40
CORPUS_MAX_EDGES = 140
CORPUS_SIZE = 200
CORPUS_RANDOM_MIN_VERTICES = 4
CORPUS_RANDOM_MAX_VERTICES = 9
CORPUS_EDGE_PROBABILITY = 0.55
CORPUS_EXTRA_EDGE_PROBABILITY = 0.25
GLUING_PAIRS = 24

# ── Harness ───────────────────────────────────────────────
HARNESS_WORKERS = 4
DEFAULT_DIM = 3

# ── Output ────────────────────────────────────────────────
REPORT_INDENT = 2
ENCODING = "utf-8"
