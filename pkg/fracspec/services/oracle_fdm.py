"""Implicit L1 finite-difference reference solver for 1D variable-order diffusion.

D^{α(t)} u = a(t) u_xx + f with α(t) ∈ (0, 1] frozen at each time level.
First order in time; it cross-checks magnitudes of the spectral solver.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy import linalg, special

from fracspec.checks import require_int_at_least, require_positive
from fracspec.errors import NumericalFailure, ProblemValidationError
from fracspec.models import PdeProblem, evaluate_time_function
from fracspec.services.pipeline import normalize

logger = logging.getLogger("fracspec.oracle")

RICHARDSON_ORDER = 1


@dataclass(frozen=True)
class FdmGrid:
    h: float
    tau: float
    n_x: int
    n_t: int

    def __post_init__(self) -> None:
        require_positive("h", self.h)
        require_positive("tau", self.tau)
        require_int_at_least("n_x", self.n_x, 2)
        require_int_at_least("n_t", self.n_t, 1)

    @classmethod
    def uniform(cls, L: float, T: float, n_x: int, n_t: int) -> FdmGrid:
        return cls(L / n_x, T / n_t, n_x, n_t)

    def refined(self) -> FdmGrid:
        return FdmGrid(self.h / 2, self.tau / 2, 2 * self.n_x, 2 * self.n_t)


def _diffusion_coefficient(problem: PdeProblem):
    terms = problem.terms
    if problem.domain.d != 1:
        raise ProblemValidationError("the finite-difference oracle is one-dimensional")
    if problem.m != 1:
        raise ProblemValidationError("the finite-difference oracle needs an order in (0, 1]")
    if len(terms) != 1 or terms[0].side != "rhs" or terms[0].symbol.kind != "laplacian" or terms[0].order is not None:
        raise ProblemValidationError("the finite-difference oracle handles a single a(t)·u_xx term")
    return terms[0].coefficient


def _l1_weights(n: int, alpha: float) -> np.ndarray:
    """b_k = (k+1)^{1−α} − k^{1−α}, k = 0..n−1."""
    powers = np.arange(n + 1, dtype=float) ** (1 - alpha)
    # 0^{1−α} is 0 also at α = 1, where the weights reduce to backward Euler
    powers[0] = 0.0
    return np.diff(powers)


def solve_diffusion_l1(problem: PdeProblem, grid: FdmGrid) -> np.ndarray:
    """Nodal values, shape (n_t + 1, n_x + 1)."""
    problem = normalize(problem)
    coefficient = _diffusion_coefficient(problem)
    L = problem.domain.lengths[0]
    if abs(grid.h * grid.n_x - L) > 1e-9 * L or abs(grid.tau * grid.n_t - problem.T) > 1e-9 * problem.T:
        raise ProblemValidationError("grid does not match the problem's domain and horizon")

    x = np.linspace(0.0, L, grid.n_x + 1)
    t = np.linspace(0.0, problem.T, grid.n_t + 1)
    alphas = np.asarray(problem.leading_order.eval(t), dtype=float)
    diffusion = evaluate_time_function(coefficient, t)
    points = x[:, None]
    interior = points[1:-1]

    u = np.zeros((grid.n_t + 1, grid.n_x + 1), dtype=complex)
    u[0] = np.asarray(problem.initial[0](points), dtype=complex)
    boundary = problem.boundary.value
    h2 = grid.h**2

    for n in range(1, grid.n_t + 1):
        alpha = alphas[n]
        c_n = grid.tau ** (-alpha) / special.gamma(2 - alpha)
        b = _l1_weights(n, alpha)
        history = np.zeros(grid.n_x - 1, dtype=complex)
        if n > 1:
            # Σ_{k=1}^{n−1} b_k (u^{n−k} − u^{n−k−1})
            diffs = np.diff(u[:n, 1:-1], axis=0)  # rows j = 1..n−1
            history = b[1:n] @ diffs[::-1]
        if boundary is not None:
            u[n, 0], u[n, -1] = boundary.value(points[[0, -1]], t[n])
        a_n = diffusion[n]
        rhs = np.asarray(problem.forcing(interior, t[n]), dtype=complex) + c_n * (u[n - 1, 1:-1] - history)
        rhs[0] += a_n / h2 * u[n, 0]
        rhs[-1] += a_n / h2 * u[n, -1]
        bands = np.zeros((3, grid.n_x - 1), dtype=complex)
        bands[0, 1:] = -a_n / h2
        bands[1, :] = c_n + 2 * a_n / h2
        bands[2, :-1] = -a_n / h2
        try:
            u[n, 1:-1] = linalg.solve_banded((1, 1), bands, rhs)
        except (linalg.LinAlgError, ValueError) as exc:
            raise NumericalFailure(f"tridiagonal solve failed at level n={n}: {exc}") from exc
    return u


def richardson_error(problem: PdeProblem, grid: FdmGrid) -> tuple[np.ndarray, float]:
    """Coarse solution and its estimated error at T from one uniform refinement."""
    coarse = solve_diffusion_l1(problem, grid)
    fine = solve_diffusion_l1(problem, grid.refined())
    gap = float(np.max(np.abs(coarse[-1] - fine[-1, ::2])))
    factor = 2**RICHARDSON_ORDER / (2**RICHARDSON_ORDER - 1)
    estimate = factor * gap
    logger.info("L1 oracle h=%g τ=%g: Richardson estimate %.3e", grid.h, grid.tau, estimate)
    return coarse, estimate
