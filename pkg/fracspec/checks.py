"""Validation predicates shared by models and services."""
from __future__ import annotations

import math
from typing import Any

from fracspec.errors import DomainError

INTEGER_TOL = 1e-12


def is_integer(value: float) -> bool:
    """True when value is an integer up to INTEGER_TOL."""
    return abs(value - round(value)) < INTEGER_TOL


def require_positive(name: str, value: float) -> float:
    if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
        raise DomainError(f"{name} must be a positive finite number, got {value!r}")
    return float(value)


def require_int_at_least(name: str, value: Any, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise DomainError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return value


def require_in_unit_interval(name: str, value: float) -> float:
    """0 < value <= 1."""
    if not (math.isfinite(value) and 0 < value <= 1):
        raise DomainError(f"{name} must lie in (0, 1], got {value!r}")
    return float(value)


def require_time_in_range(t_min: float, t_max: float, T: float, *, open_left: bool = False) -> None:
    """Check sampled times against [0, T] (or (0, T] with open_left)."""
    slack = 1e-12 * max(1.0, T)
    if not (math.isfinite(t_min) and math.isfinite(t_max)):
        raise DomainError("time values must be finite")
    if open_left and t_min <= 0:
        raise DomainError(f"t must be > 0, got {t_min!r}")
    if t_min < -slack or t_max > T + slack:
        raise DomainError(f"t must lie in [0, {T:g}], got range [{t_min:g}, {t_max:g}]")
