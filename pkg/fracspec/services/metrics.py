"""Error metrics: Merr, Rerr, approximation order and convergence order."""
from __future__ import annotations

import math
from typing import Callable, Optional, Union

import numpy as np

from fracspec.checks import require_int_at_least
from fracspec.errors import DomainError
from fracspec.models import BoxDomain, ErrorReport, PdeSolution, PowerProfile, SeparableField, VotfOdeSolution
from fracspec.services.pipeline import eval_pde_grid

# Reported when an error is exactly zero and the order is unbounded
INFINITE_ORDER = math.inf

ExactField = Union[SeparableField, PowerProfile, Callable[[np.ndarray, float], np.ndarray]]
Approximation = Union[PdeSolution, VotfOdeSolution, Callable[[np.ndarray, float], np.ndarray]]


def sample_points(domain: BoxDomain, N_t: int) -> np.ndarray:
    """N_t uniform interior points per dimension, flattened to (N_t^d, d)."""
    require_int_at_least("N_t", N_t, 1)
    axes = [length * np.arange(1, N_t + 1) / (N_t + 1) for length in domain.lengths]
    grids = np.meshgrid(*axes, indexing="ij")
    return np.stack([grid.ravel() for grid in grids], axis=-1)


def sample_times(T: float, K_t: int) -> np.ndarray:
    """K_t uniform samples of [0, T] (just T when K_t = 1)."""
    require_int_at_least("K_t", K_t, 1)
    if K_t == 1:
        return np.array([T], dtype=float)
    return np.linspace(0.0, T, K_t)


def _sample_exact(exact: ExactField, points: np.ndarray, times: np.ndarray, axis: Optional[int]) -> np.ndarray:
    if isinstance(exact, SeparableField):
        return exact.values(points, times, axis=axis)
    if isinstance(exact, PowerProfile):
        return np.asarray(exact.evaluate(times))[:, None]
    return np.array([np.asarray(exact(points, t), dtype=complex) for t in times])


def _sample_approx(approx: Approximation, points: np.ndarray, times: np.ndarray, axis: Optional[int]) -> np.ndarray:
    if isinstance(approx, PdeSolution):
        return eval_pde_grid(approx, points, times, axis=axis)
    if isinstance(approx, VotfOdeSolution):
        return np.asarray(approx.profile.evaluate(times))[:, None]
    return np.array([np.asarray(approx(points, t), dtype=complex) for t in times])


def _points_for(approx: Approximation, N_t: int, domain: Optional[BoxDomain]) -> np.ndarray:
    if isinstance(approx, VotfOdeSolution):
        return np.zeros((1, 1))
    domain = domain or getattr(approx, "domain", None)
    if domain is None:
        raise DomainError("a domain is required to place test points")
    return sample_points(domain, N_t)


def _part(values: np.ndarray, part: Optional[str]) -> np.ndarray:
    if part is None:
        return values
    if part == "real":
        return values.real
    if part == "imag":
        return values.imag
    raise DomainError(f"part must be 'real' or 'imag', got {part!r}")


def merr(
    exact: ExactField,
    approx: Approximation,
    T: float,
    N_t: int,
    *,
    part: Optional[str] = None,
    axis: Optional[int] = None,
    domain: Optional[BoxDomain] = None,
) -> float:
    """max |exact − approx| over the interior test points at t = T."""
    points = _points_for(approx, N_t, domain)
    times = np.array([T], dtype=float)
    error = _part(_sample_exact(exact, points, times, axis) - _sample_approx(approx, points, times, axis), part)
    return float(np.max(np.abs(error)))


def rerr(
    exact: ExactField,
    approx: Approximation,
    T: float,
    N_t: int,
    K_t: int,
    *,
    part: Optional[str] = None,
    axis: Optional[int] = None,
    domain: Optional[BoxDomain] = None,
) -> float:
    """Σ|exact − approx|² / Σ|exact|² over test points × test times (no square root)."""
    points = _points_for(approx, N_t, domain)
    times = sample_times(T, K_t)
    reference = _part(_sample_exact(exact, points, times, axis), part)
    error = reference - _part(_sample_approx(approx, points, times, axis), part)
    denominator = float(np.sum(np.abs(reference) ** 2))
    if denominator == 0:
        raise DomainError("relative error undefined for an identically zero exact field")
    return float(np.sum(np.abs(error) ** 2)) / denominator


def relative_error(
    exact: ExactField,
    approx: Approximation,
    T: float,
    N_t: int,
    K_t: int,
    *,
    part: Optional[str] = None,
    axis: Optional[int] = None,
    domain: Optional[BoxDomain] = None,
) -> float:
    """Square root of :func:`rerr`, the relative L2 figure the tables report.

    AO and CO are computed from this value.
    """
    return math.sqrt(rerr(exact, approx, T, N_t, K_t, part=part, axis=axis, domain=domain))


def ao(rerr_value: float, K: int) -> float:
    """log(err) / log(1/K)."""
    if K < 2:
        raise DomainError("approximation order needs K >= 2")
    if rerr_value <= 0:
        return INFINITE_ORDER
    return math.log(rerr_value) / math.log(1.0 / K)


def co(err_half: float, err_full: float) -> float:
    """log2(err(N/2) / err(N))."""
    if err_half <= 0 or err_full <= 0:
        return INFINITE_ORDER
    return math.log2(err_half / err_full)


def error_report(
    exact: ExactField,
    approx: Approximation,
    T: float,
    N_t: int,
    K_t: int,
    *,
    parameters: Optional[dict] = None,
    domain: Optional[BoxDomain] = None,
) -> ErrorReport:
    """Merr and relative L2 error of one run on the N_t × K_t test grid."""
    return ErrorReport(
        merr=merr(exact, approx, T, N_t, domain=domain),
        rerr=relative_error(exact, approx, T, N_t, K_t, domain=domain),
        n_t=N_t,
        k_t=K_t,
        parameters=dict(parameters or {}),
    )
