"""Configuration for the fracspec solver and benchmark harness."""
from __future__ import annotations

import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()


def _parse_int(value: str | None, default: int) -> int:
    if not value:
        return default
    try:
        return int(value.strip())
    except ValueError:
        return default


def _parse_float(value: str | None, default: float) -> float:
    if not value:
        return default
    try:
        return float(value.strip())
    except ValueError:
        return default


# Parallelism cap for mode solves and the `all` sweep (0 = one worker per CPU)
THREADS = _parse_int(os.getenv("FRACSPEC_THREADS"), 0)

# Müntz basis step used when a run does not set one
DEFAULT_DELTA = _parse_float(os.getenv("FRACSPEC_DELTA"), 0.25)

# Gauss-Legendre points per dimension for the sine projections
QUAD_ORDER_1D = _parse_int(os.getenv("FRACSPEC_QUAD_ORDER_1D"), 64)
QUAD_ORDER_2D = _parse_int(os.getenv("FRACSPEC_QUAD_ORDER_2D"), 32)

# Metric test grids: N_t interior points per dimension, K_t time samples
TEST_POINTS = _parse_int(os.getenv("FRACSPEC_TEST_POINTS"), 101)
TEST_TIMES = _parse_int(os.getenv("FRACSPEC_TEST_TIMES"), 101)

# Where CSVs and gnuplot scripts land
OUT_DIR = Path(os.getenv("FRACSPEC_OUT_DIR", "results"))

LOG_LEVEL = os.getenv("FRACSPEC_LOG_LEVEL", "INFO").upper()

# HTTP service
API_HOST = os.getenv("FRACSPEC_API_HOST", "0.0.0.0")
API_PORT = _parse_int(os.getenv("FRACSPEC_API_PORT"), 8000)


def worker_count() -> int:
    """Effective worker count for thread pools."""
    if THREADS > 0:
        return THREADS
    return os.cpu_count() or 1
