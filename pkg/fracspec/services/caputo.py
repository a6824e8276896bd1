"""Variable-order Caputo calculus on power functions and power profiles.

D^{α(t)} t^p = Γ(p+1)/Γ(p+1−α(t)) · t^{p−α(t)}, and 0 for integer p < m where
m is the ceiling of the operator's own order.
"""
from __future__ import annotations

import math
from typing import Optional

import numpy as np
from scipy import special

from fracspec.checks import is_integer, require_time_in_range
from fracspec.errors import DomainError, UnsupportedExponentError
from fracspec.models.order import OrderFunction
from fracspec.models.profile import PowerProfile, PowerTerm


def gamma(x: float) -> float:
    """Γ(x) for positive finite x. Overflows to inf above x ≈ 171.6."""
    if not (isinstance(x, (int, float, np.floating)) and math.isfinite(x) and x > 0):
        raise DomainError(f"gamma is defined here for positive finite arguments, got {x!r}")
    return float(special.gamma(x))


def _time_array(t: float | np.ndarray, order: OrderFunction) -> np.ndarray:
    t_arr = np.asarray(t, dtype=float)
    if t_arr.size:
        require_time_in_range(float(t_arr.min()), float(t_arr.max()), order.domain_end, open_left=True)
    return t_arr


def caputo_power(p: float, order: OrderFunction, t: float | np.ndarray) -> float | np.ndarray:
    t_arr = _time_array(t, order)
    m = order.ceiling
    if is_integer(p):
        if round(p) < m:
            return 0.0 if t_arr.ndim == 0 else np.zeros(t_arr.shape)
    elif p <= m - 1:
        raise UnsupportedExponentError(p, f"power rule undefined for non-integer p <= m-1 = {m - 1}")
    alpha = order.eval(t_arr)
    value = gamma(p + 1) / special.gamma(p + 1 - alpha) * np.power(t_arr, p - alpha)
    return float(value) if t_arr.ndim == 0 else value


def caputo_profile(profile: PowerProfile, order: OrderFunction, t: float | np.ndarray) -> complex | np.ndarray:
    t_arr = _time_array(t, order)
    total = np.zeros(t_arr.shape, dtype=complex)
    for term in profile.terms:
        try:
            total += term.coefficient * caputo_power(term.exponent, order, t_arr)
        except UnsupportedExponentError as exc:
            raise UnsupportedExponentError(term.exponent, f"profile term ({term.coefficient:g})t^p: {exc}") from exc
    return complex(total) if t_arr.ndim == 0 else total


def apply_time_operator(
    profile: PowerProfile, order: Optional[OrderFunction], t: float | np.ndarray
) -> complex | np.ndarray:
    """D^{order} profile, or the profile itself when order is None."""
    if order is None:
        return profile.evaluate(t)
    return caputo_profile(profile, order, t)


def derivative_profile(profile: PowerProfile, k: int) -> PowerProfile:
    """k-th classical derivative, termwise."""
    if k < 0:
        raise DomainError(f"derivative order must be >= 0, got {k}")
    if k == 0:
        return profile
    terms = []
    for term in profile.terms:
        p = term.exponent
        if is_integer(p) and round(p) < k:
            continue
        if not is_integer(p) and p < k:
            raise UnsupportedExponentError(p, f"{k}-th derivative of t^p is unbounded at t=0")
        # poch(p+1-k, k) = Γ(p+1)/Γ(p+1−k)
        terms.append(PowerTerm(term.coefficient * special.poch(p + 1 - k, k), max(p - k, 0.0)))
    return PowerProfile(tuple(terms))
