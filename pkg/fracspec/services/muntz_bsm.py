"""Backward substitution method for one variable-order fractional ODE.

The solution is posited as w = w̄ + Σ q_k t^{δ_k}: w̄ carries the initial data
and is annihilated by D^α, each Müntz term vanishes to order m−1 at t=0, and
the q_k are fitted by least squares at Gauss–Chebyshev points.
"""
from __future__ import annotations

import logging
import math
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np

from fracspec.checks import require_int_at_least, require_positive, require_time_in_range
from fracspec.errors import (
    DomainError,
    FracspecError,
    IllConditionedWarning,
    NumericalFailure,
    UnsupportedExponentError,
)
from fracspec.models import (
    CollocationGrid,
    MuntzBasis,
    OrderFunction,
    PowerProfile,
    VotfOdeProblem,
    VotfOdeSolution,
    evaluate_time_function,
)
from fracspec.models.timefn import TimeFunction
from fracspec.services.caputo import caputo_power, caputo_profile, derivative_profile
from fracspec.services.linalg import least_squares

logger = logging.getLogger("fracspec.bsm")


def with_context(exc: FracspecError, context: str) -> FracspecError:
    """Copy of exc of the same kind with a location prefix."""
    if isinstance(exc, UnsupportedExponentError):
        err = UnsupportedExponentError(exc.exponent, f"{context}: {exc}")
    else:
        err = type(exc)(f"{context}: {exc}")
    return err


def gc_points(N_c: int, T: float) -> CollocationGrid:
    """t_j = T/2 · (1 + cos(π(2j−1)/(2N_c))), j = 1..N_c."""
    require_int_at_least("N_c", N_c, 1)
    require_positive("T", T)
    j = np.arange(1, N_c + 1)
    return CollocationGrid(T / 2 * (1 + np.cos(np.pi * (2 * j - 1) / (2 * N_c))))


def homogeneous_part(initial_values) -> PowerProfile:
    values = list(initial_values)
    if not values:
        raise DomainError("at least one initial value is required")
    return PowerProfile.from_pairs((h / math.factorial(i), i) for i, h in enumerate(values))


def _check_index(basis: MuntzBasis, k: int) -> None:
    if not (isinstance(k, (int, np.integer)) and 1 <= k <= basis.K):
        raise DomainError(f"basis index k must lie in 1..{basis.K}, got {k!r}")


def phi_k(basis: MuntzBasis, k: int, t: float | np.ndarray) -> float | np.ndarray:
    """Φ_k(t) = t^{δ_k}."""
    _check_index(basis, k)
    t_arr = np.asarray(t, dtype=float)
    require_time_in_range(float(t_arr.min()), float(t_arr.max()), basis.T)
    value = np.power(t_arr, basis.exponents[k - 1])
    return float(value) if t_arr.ndim == 0 else value


def varphi_k(basis: MuntzBasis, k: int, order: OrderFunction, t: float | np.ndarray) -> float | np.ndarray:
    """D^{α(t)} Φ_k(t)."""
    _check_index(basis, k)
    return caputo_power(float(basis.exponents[k - 1]), order, t)


def assemble_system(
    problem: VotfOdeProblem, basis: MuntzBasis, grid: CollocationGrid
) -> tuple[np.ndarray, np.ndarray]:
    if grid.N_c < basis.K:
        raise DomainError(f"{grid.N_c} collocation points cannot determine {basis.K} coefficients")
    t = grid.points
    w_bar = homogeneous_part(problem.initial_values)
    lower = [(order, evaluate_time_function(beta, t)) for order, beta in problem.lower_terms]
    reaction = evaluate_time_function(problem.reaction, t) if problem.reaction is not None else None

    A = np.empty((t.size, basis.K), dtype=complex)
    for k in range(1, basis.K + 1):
        try:
            column = varphi_k(basis, k, problem.leading_order, t).astype(complex)
            for order, beta in lower:
                column -= beta * caputo_power(float(basis.exponents[k - 1]), order, t)
        except FracspecError as exc:
            raise with_context(exc, f"column k={k}") from exc
        if reaction is not None:
            column -= reaction * phi_k(basis, k, t)
        A[:, k - 1] = column

    try:
        b = evaluate_time_function(problem.forcing, t)
        for order, beta in lower:
            b += beta * caputo_profile(w_bar, order, t)
    except FracspecError as exc:
        raise with_context(exc, "right-hand side") from exc
    if reaction is not None:
        b += reaction * w_bar.evaluate(t)

    if not (np.all(np.isfinite(A)) and np.all(np.isfinite(b))):
        bad_rows = np.where(~(np.all(np.isfinite(A), axis=1) & np.isfinite(b)))[0]
        raise NumericalFailure(f"assembled system is not finite at collocation rows j={(bad_rows + 1).tolist()}")
    return A, b


def solve_votfode(
    problem: VotfOdeProblem, basis: MuntzBasis, collocation_count: Optional[int] = None
) -> VotfOdeSolution:
    N_c = collocation_count if collocation_count is not None else 2 * basis.K
    grid = gc_points(N_c, problem.T)
    A, b = assemble_system(problem, basis, grid)
    result = least_squares(A, b)
    ill_conditioned = not result.full_rank
    if ill_conditioned:
        message = f"collocation matrix has numerical rank {result.rank} < K={basis.K}"
        warnings.warn(message, IllConditionedWarning, stacklevel=2)
        logger.warning("%s (δ=%g, T=%g)", message, basis.delta, problem.T)
    return VotfOdeSolution(
        homogeneous_poly=homogeneous_part(problem.initial_values),
        basis=basis,
        coefficients=result.solution,
        residual_norm=result.residual_norm,
        rank=result.rank,
        collocation_count=N_c,
        ill_conditioned=ill_conditioned,
    )


def eval_solution(sol: VotfOdeSolution, t: float | np.ndarray) -> complex | np.ndarray:
    t_arr = np.asarray(t, dtype=float)
    require_time_in_range(float(t_arr.min()), float(t_arr.max()), sol.T)
    return sol.profile.evaluate(t)


def eval_solution_derivative(sol: VotfOdeSolution, t: float | np.ndarray, i: int) -> complex | np.ndarray:
    t_arr = np.asarray(t, dtype=float)
    require_time_in_range(float(t_arr.min()), float(t_arr.max()), sol.T)
    return derivative_profile(sol.profile, i).evaluate(t)


@dataclass(frozen=True, eq=False)
class ManufacturedForcing:
    """θ(t) making a given power profile an exact solution of the ODE."""

    leading_order: OrderFunction
    lower_terms: tuple[tuple[OrderFunction, TimeFunction], ...]
    reaction: Optional[TimeFunction]
    exact: PowerProfile

    def __call__(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        theta = np.asarray(caputo_profile(self.exact, self.leading_order, t), dtype=complex)
        for order, beta in self.lower_terms:
            theta = theta - evaluate_time_function(beta, t) * caputo_profile(self.exact, order, t)
        if self.reaction is not None:
            theta = theta - evaluate_time_function(self.reaction, t) * self.exact.evaluate(t)
        return theta


def manufactured_forcing(
    leading_order: OrderFunction,
    lower_terms,
    reaction: Optional[TimeFunction],
    exact: PowerProfile,
) -> ManufacturedForcing:
    return ManufacturedForcing(leading_order, tuple(lower_terms), reaction, exact)
