"""
Configuration module for the quartic torsion engine.
Centralizes all paths, settings, and numeric parameters.
"""
import os
from pathlib import Path

# Base directories
BASE_DIR = Path(__file__).parent.parent
DATA_DIR = BASE_DIR / "data"
RESULTS_DIR = BASE_DIR / "results"

# Curve data
FIXTURE_FILE = Path(os.environ.get("QUARTIC_TORSION_FIXTURE", DATA_DIR / "curves_fixture.txt"))

# Scan results storage
SCAN_RESULTS_FILE = RESULTS_DIR / "scan_results.json"

# Logging configuration
LOG_DIR = BASE_DIR / "logs"
LOG_FILE = LOG_DIR / "quartic_torsion.log"
LOG_LEVEL = os.environ.get("QUARTIC_TORSION_LOG_LEVEL", "INFO")  # Options: DEBUG, INFO, WARNING, ERROR, CRITICAL
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# Scan options
SKIP_SCANNED_CURVES = True  # Reuse entries already in the scan store
DEFAULT_JOBS = 1

# Factorization settings
FACTOR_START_PRIME = 5  # Smallest prime tried for modular factorization
RANDOM_SEED = 20240611  # Seed for equal-degree splitting

# Root finding settings
NUMERIC_ROOT_DPS = 60  # Working precision (decimal digits) of the numeric embedding method

# Families settings
HALVING_MAX_DEGREE = 4

# Orders tried by the exhaustive torsion mode
EXHAUSTIVE_MAX_ORDER = 24


# Ensure directories exist
def ensure_directories():
    """Create necessary directories if they don't exist."""
    for directory in [DATA_DIR, RESULTS_DIR, LOG_DIR]:
        directory.mkdir(parents=True, exist_ok=True)
