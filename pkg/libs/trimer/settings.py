import os

# Environment-driven defaults. Read once at import; pass explicit values to
# the functions that accept them when a caller needs something else.
LOG_LEVEL = os.getenv("TRIMER_LOG_LEVEL", "INFO").upper()

# Below this temperature thermal_state returns the ground-space projector.
T_FLOOR_K = float(os.getenv("TRIMER_T_FLOOR_K", "1e-6"))

# Eigenvalues closer than this (Kelvin) are treated as one level.
DEGENERACY_TOL = float(os.getenv("TRIMER_DEGENERACY_TOL", "1e-9"))

MAX_SITES = 10

CORS_ORIGINS = os.getenv("TRIMER_CORS_ORIGINS")
