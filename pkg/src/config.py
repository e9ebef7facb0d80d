import os
from pathlib import Path


VERSION = "0.1.0"


# ====================
#  File and Data Paths
# ====================
CACHE_ROOT = os.environ.get("IMPL_CACHE_ROOT", f"{Path.home()}/.cache/implication-census")
CACHE_ENABLED = os.environ.get("IMPL_CACHE", "1") != "0"

# (Derived from root directory specified above)
# Snapshots are keyed by version and stored for power-of-two sizes only.
SEQUENCES_CACHE_TEMPLATE = f"{{cache_root}}/sequences/v{VERSION}/snapshot_n{{n_max}}.json"
SNAPSHOT_MIN_N = 64


# ====================
#  Enumeration Limits
# ====================
# C_16 = 9,694,845 bracketings; beyond this only sequence-level work is offered.
ENUMERATION_CAP = 16
# g_10 is about 5 million rows; IMPL_CENSUS_CAP raises the default up to the hard cap.
CENSUS_DEFAULT_CAP = int(os.environ.get("IMPL_CENSUS_CAP", "10"))
CENSUS_HARD_CAP = 12
TABLE_MAX_N = 5


# ====================
#  Default Parameters
# ====================
DEFAULT_SERIES_ORDER = 64
CONSTANT_DIGITS = 30
DEFAULT_RATIO_DIGITS = 10
MAX_RATIO_DIGITS = 200
CONVERGENCE_ENVELOPE = 5
MAX_CONCURRENT_WORKERS = int(os.environ.get("IMPL_WORKERS", "1"))
GLYPHS = os.environ.get("IMPL_GLYPHS", "ascii")
