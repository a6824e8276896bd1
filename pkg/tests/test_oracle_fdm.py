"""Tests for the L1 finite-difference oracle."""
import numpy as np
import pytest

from fracspec.errors import DomainError, ProblemValidationError
from fracspec.services.benchmarks import example2_problem, example3_problem, example7_problem
from fracspec.services.oracle_fdm import FdmGrid, _l1_weights, richardson_error, solve_diffusion_l1


def test_l1_weights():
    """b_k = (k+1)^{1−α} − k^{1−α}."""
    np.testing.assert_allclose(_l1_weights(3, 0.5), [1.0, np.sqrt(2) - 1, np.sqrt(3) - np.sqrt(2)])


def test_l1_weights_at_order_one():
    """Backward Euler when α = 1."""
    np.testing.assert_array_equal(_l1_weights(4, 1.0), [1.0, 0.0, 0.0, 0.0])


def test_grid_validation():
    """Positive spacings and enough cells."""
    with pytest.raises(DomainError):
        FdmGrid(0.0, 0.1, 10, 10)
    with pytest.raises(DomainError):
        FdmGrid(0.1, 0.1, 1, 10)
    grid = FdmGrid.uniform(1.0, 1.0, 10, 20)
    assert grid.h == pytest.approx(0.1)
    assert grid.refined() == FdmGrid(0.05, 0.025, 20, 40)


def test_grid_must_match_problem():
    """The grid spans the domain and the horizon."""
    with pytest.raises(ProblemValidationError):
        solve_diffusion_l1(example3_problem(), FdmGrid(0.1, 0.1, 5, 10))


def test_oracle_is_one_dimensional():
    """2D problems are out of scope."""
    with pytest.raises(ProblemValidationError):
        solve_diffusion_l1(example7_problem(), FdmGrid.uniform(1.0, 1.0, 10, 10))


def test_solution_shape_and_initial_row():
    """Nodal array (n_t+1, n_x+1) starting from u(x, 0)."""
    problem = example3_problem()
    grid = FdmGrid.uniform(1.0, 1.0, 20, 10)
    u = solve_diffusion_l1(problem, grid)
    assert u.shape == (11, 21)
    x = np.linspace(0.0, 1.0, 21)
    np.testing.assert_allclose(u[0], 10 * x**2 * (1 - x), atol=1e-14)
    assert u[-1, 0] == 0 and u[-1, -1] == 0


def test_oracle_converges():
    """Halving h and τ shrinks the error at T."""
    problem = example3_problem()
    x = np.linspace(0.0, 1.0, 21)
    exact = problem.exact.values(x[:, None], [1.0])[0]
    coarse = solve_diffusion_l1(problem, FdmGrid.uniform(1.0, 1.0, 20, 20))
    fine = solve_diffusion_l1(problem, FdmGrid.uniform(1.0, 1.0, 40, 40))
    coarse_error = np.max(np.abs(coarse[-1] - exact))
    fine_error = np.max(np.abs(fine[-1, ::2] - exact))
    assert fine_error < coarse_error
    assert coarse_error < 1e-1


def test_richardson_estimate_tracks_true_error():
    """The estimate is within an order of magnitude of the actual error."""
    problem = example2_problem(0.5)
    grid = FdmGrid.uniform(10.0, 0.5, 50, 50)
    coarse, estimate = richardson_error(problem, grid)
    x = np.linspace(0.0, 10.0, 51)
    actual = np.max(np.abs(coarse[-1] - problem.exact.values(x[:, None], [0.5])[0]))
    assert estimate > 0
    assert actual / 10 < estimate < actual * 10
