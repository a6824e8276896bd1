"""Tests for the Müntz collocation solver of one fractional ODE."""
import numpy as np
import pytest

from fracspec.errors import DomainError, IllConditionedWarning, NumericalFailure, ProblemValidationError
from fracspec.models import (
    ConstantTime,
    MuntzBasis,
    OrderFunction,
    PolynomialTime,
    PowerProfile,
    SineTime,
    VotfOdeProblem,
)
from fracspec.services import muntz_bsm
from fracspec.services.caputo import caputo_profile
from fracspec.services.linalg import LeastSquaresResult, least_squares
from fracspec.services.muntz_bsm import (
    eval_solution,
    eval_solution_derivative,
    gc_points,
    homogeneous_part,
    manufactured_forcing,
    phi_k,
    solve_votfode,
    varphi_k,
)


def _exact_span_problem(T: float = 1.0):
    """Two-term ODE whose solution 1 + 2t^{1.25} − t^{1.5} lies in the K=3, δ=0.25 span."""
    leading = OrderFunction.constant(0.5, T)
    lower = ((OrderFunction.constant(0.3, T), ConstantTime(0.5)),)
    reaction = PolynomialTime((1.0, 0.5))
    exact = PowerProfile.from_pairs([(1.0, 0), (2.0, 1.25), (-1.0, 1.5)])
    forcing = manufactured_forcing(leading, lower, reaction, exact)
    return VotfOdeProblem(leading, lower, forcing, (1.0,), T, reaction), exact


def test_gc_points():
    """Chebyshev nodes lie in (0, T), descending."""
    grid = gc_points(6, 2.0)
    assert grid.N_c == 6
    assert np.all((grid.points > 0) & (grid.points < 2.0))
    assert np.all(np.diff(grid.points) < 0)
    assert gc_points(1, 2.0).points[0] == pytest.approx(1.0)


def test_gc_points_needs_one_point():
    """N_c >= 1."""
    with pytest.raises(DomainError):
        gc_points(0, 1.0)


def test_homogeneous_part():
    """w̄ = Σ h_i t^i / i!."""
    w_bar = homogeneous_part([1.0, 2.0, 6.0])
    assert w_bar.evaluate(1.0) == pytest.approx(1.0 + 2.0 + 3.0)


def test_basis_functions(half_order):
    """Φ_k = t^{δ_k} and φ_k = D^α Φ_k."""
    basis = MuntzBasis.for_order(half_order, 3, 0.25, 1.0)
    np.testing.assert_allclose(basis.exponents, [1.0, 1.25, 1.5])
    assert phi_k(basis, 2, 0.5) == pytest.approx(0.5**1.25)
    assert varphi_k(basis, 1, half_order, 0.25) == pytest.approx(2 * 0.5 / np.sqrt(np.pi), rel=1e-14)
    with pytest.raises(DomainError):
        phi_k(basis, 4, 0.5)
    with pytest.raises(DomainError):
        phi_k(basis, 1, 1.5)


def test_exact_span_recovery():
    """A solution inside the span is recovered to rounding error."""
    problem, exact = _exact_span_problem()
    basis = MuntzBasis.for_order(problem.leading_order, 3, 0.25, problem.T)
    sol = solve_votfode(problem, basis)
    np.testing.assert_allclose(sol.coefficients, [0.0, 2.0, -1.0], atol=1e-10)
    assert not sol.ill_conditioned
    assert sol.rank == 3
    assert sol.collocation_count == 6
    t = np.linspace(0.0, 1.0, 11)
    np.testing.assert_allclose(eval_solution(sol, t), exact.evaluate(t), atol=1e-10)


def test_initial_conditions_hold_exactly():
    """w(0) and w'(0) equal the data regardless of the fit."""
    leading = OrderFunction.constant(1.5, 1.0)
    problem = VotfOdeProblem(leading, (), lambda t: np.cos(t), (1.0, -2.0), 1.0)
    sol = solve_votfode(problem, MuntzBasis.for_order(leading, 4, 0.5, 1.0))
    assert abs(eval_solution(sol, 0.0) - 1.0) <= 1e-12
    assert abs(eval_solution_derivative(sol, 0.0, 1) + 2.0) <= 1e-12


def test_initial_value_count_must_match_ceiling():
    """m initial values for a ceiling-m order."""
    with pytest.raises(ProblemValidationError):
        VotfOdeProblem(OrderFunction.constant(1.5, 1.0), (), ConstantTime(0.0), (1.0,), 1.0)


def test_too_few_collocation_points(half_order):
    """N_c < K cannot determine the coefficients."""
    problem = VotfOdeProblem(half_order, (), ConstantTime(1.0), (0.0,), 1.0)
    with pytest.raises(DomainError):
        solve_votfode(problem, MuntzBasis.for_order(half_order, 4, 0.25, 1.0), collocation_count=3)


def test_non_finite_forcing_fails(half_order):
    """NaN in the right-hand side is a numerical failure naming the rows."""
    problem = VotfOdeProblem(half_order, (), lambda t: np.where(t > 0.5, np.nan, 1.0), (0.0,), 1.0)
    with pytest.raises(NumericalFailure, match="collocation rows"):
        solve_votfode(problem, MuntzBasis.for_order(half_order, 3, 0.25, 1.0))


def test_rank_deficiency_warns(half_order, monkeypatch):
    """A rank-deficient fit still returns, flagged and warned."""
    problem, _ = _exact_span_problem()

    def truncated(A, b):
        result = least_squares(A, b)
        return LeastSquaresResult(result.solution, result.rank - 1, result.residual_norm)

    monkeypatch.setattr(muntz_bsm, "least_squares", truncated)
    with pytest.warns(IllConditionedWarning):
        sol = solve_votfode(problem, MuntzBasis.for_order(problem.leading_order, 3, 0.25, 1.0))
    assert sol.ill_conditioned
    assert sol.rank == 2


def test_least_squares_detects_dependent_columns():
    """Duplicate columns leave the rank one short."""
    A = np.array([[1.0, 1.0, 0.0], [2.0, 2.0, 1.0], [3.0, 3.0, 0.5], [4.0, 4.0, 2.0]])
    b = np.array([1.0, 2.0, 3.0, 4.0])
    result = least_squares(A, b)
    assert result.rank == 2
    assert not result.full_rank
    np.testing.assert_allclose(A @ result.solution, b, atol=1e-12)


def test_least_squares_relative_cutoff():
    """rcond drops a column that is independent only at the 1e-10 level."""
    A = np.array([[1.0, 1.0], [1.0, 1.0 + 1e-10], [1.0, 1.0]])
    b = np.array([1.0, 1.0, 1.0])
    assert least_squares(A, b).rank == 2
    capped = least_squares(A, b, rcond=1e-6)
    assert capped.rank == 1
    assert np.max(np.abs(capped.solution)) <= 1.0 + 1e-12


def test_least_squares_rejects_non_finite():
    """Infinite entries raise NumericalFailure."""
    with pytest.raises(NumericalFailure):
        least_squares(np.array([[1.0], [np.inf]]), np.array([1.0, 2.0]))


def test_solution_profile_evaluates_like_the_solver(half_order):
    """The derived profile is w̄ + Σ q_k t^{δ_k}."""
    problem = VotfOdeProblem(half_order, (), ConstantTime(1.0), (0.5,), 1.0)
    sol = solve_votfode(problem, MuntzBasis.for_order(half_order, 4, 0.25, 1.0))
    t = 0.3
    direct = 0.5 + sum(q * t**p for q, p in zip(sol.coefficients, sol.basis.exponents))
    assert eval_solution(sol, t) == pytest.approx(direct, rel=1e-14)


def _random_span_problem(rng, T: float, horizon: float):
    """Variable-order two-term ODE with a random solution in the K=3, δ=0.25 span."""
    leading = OrderFunction.from_callable(SineTime(0.6, 0.1), 1, horizon)
    lower = ((OrderFunction.constant(0.3, horizon), ConstantTime(rng.uniform(0.1, 1.0))),)
    reaction = PolynomialTime((rng.uniform(0.1, 1.0), rng.uniform(0.0, 0.5)))
    exact = PowerProfile.from_pairs(zip(rng.normal(size=4), (0.0, 1.0, 1.25, 1.5)))
    forcing = manufactured_forcing(leading, lower, reaction, exact)
    return VotfOdeProblem(leading, lower, forcing, (exact.evaluate(0.0),), T, reaction)


@pytest.mark.parametrize("seed", range(10))
def test_residual_small_between_collocation_points(seed):
    """The fitted solution satisfies the equation at 100 uniform points of (0, T]."""
    problem = _random_span_problem(np.random.default_rng(seed), 1.0, 1.0)
    sol = solve_votfode(problem, MuntzBasis.for_order(problem.leading_order, 3, 0.25, 1.0))
    (order, beta), = problem.lower_terms
    t = np.linspace(0.01, 1.0, 100)
    forcing = np.asarray(problem.forcing(t))
    residual = (
        caputo_profile(sol.profile, problem.leading_order, t)
        - beta(t) * caputo_profile(sol.profile, order, t)
        - problem.reaction(t) * sol.profile.evaluate(t)
        - forcing
    )
    assert np.max(np.abs(residual)) <= 1e-10 * np.max(np.abs(forcing))


@pytest.mark.parametrize("seed", range(5))
def test_doubling_the_horizon_keeps_the_solution(seed):
    """Solving on [0, T] and [0, 2T] agrees on the common interval."""
    short = _random_span_problem(np.random.default_rng(seed), 1.0, 2.0)
    long = _random_span_problem(np.random.default_rng(seed), 2.0, 2.0)
    w_short = solve_votfode(short, MuntzBasis.for_order(short.leading_order, 3, 0.25, 1.0))
    w_long = solve_votfode(long, MuntzBasis.for_order(long.leading_order, 3, 0.25, 2.0))
    t = np.linspace(0.0, 1.0, 50)
    expected = eval_solution(w_short, t)
    np.testing.assert_allclose(eval_solution(w_long, t), expected, rtol=1e-8, atol=1e-8 * np.max(np.abs(expected)))
