"""Tests for the boundary lifts."""
import numpy as np
import pytest

from fracspec.errors import IllConditionedWarning, ProblemValidationError
from fracspec.models import IDENTITY, LAPLACIAN, BoxDomain, ExpSum, OrderFunction, PowerProfile, SeparableField
from fracspec.services.benchmarks import example8_problem
from fracspec.services.caputo import caputo_profile
from fracspec.services.lift import (
    FIT_TOLERANCE,
    BoundarySample,
    LiftCorrection,
    build_linear_lift_1d,
    build_rbf_lift,
    lift_caputo_term,
    lift_initial_derivative,
)
from fracspec.services.pipeline import LIFT_CORRECTION_DEGREE, build_lift
from fracspec.services.spectral import boundary_centers

EXACT = SeparableField(((ExpSum([1.0], [[1.0, 1.0]]), PowerProfile.from_pairs([(1.0, 3), (0.5, 0)])),))


def test_linear_lift_interpolates_endpoints():
    """s(0, t) = g_left(t), s(L, t) = g_right(t)."""
    domain = BoxDomain((2.0,))
    left, right = PowerProfile.monomial(1.0, 2), PowerProfile.from_pairs([(3.0, 0), (1.0, 1)])
    lift = build_linear_lift_1d(left, right, domain)
    t = np.array([0.0, 0.5, 1.0])
    np.testing.assert_allclose(lift.values(np.array([[0.0]]), t)[:, 0], left.evaluate(t))
    np.testing.assert_allclose(lift.values(np.array([[2.0]]), t)[:, 0], right.evaluate(t))
    assert lift.metadata.kind == "linear-1d"


def test_linear_lift_of_zero_data_is_zero(unit_interval):
    """Homogeneous data give the zero lift."""
    lift = build_linear_lift_1d(PowerProfile.zero(), PowerProfile.zero(), unit_interval)
    assert lift.is_zero
    assert lift.metadata.kind == "zero"


def _samples(centers, with_laplacian=False):
    samples = [BoundarySample(point, "value", EXACT.profile_at(point)) for point in centers]
    if with_laplacian:
        field = EXACT.laplacian_field()
        samples += [BoundarySample(point, "laplacian", field.profile_at(point)) for point in centers]
    return samples


def test_rbf_lift_meets_boundary_values(unit_square):
    """The fitted lift reproduces the data at the centers."""
    centers = boundary_centers(unit_square, 12)
    lift = build_rbf_lift(_samples(centers), centers, 1.0)
    t = np.array([0.2, 1.0])
    np.testing.assert_allclose(lift.values(centers, t), EXACT.values(centers, t), atol=1e-6)
    assert lift.metadata.kind == "mq-rbf"
    assert lift.metadata.fit_residual < 1e-6


def test_rbf_lift_one_column_per_exponent(unit_square):
    """Every shape carries the exponents present in the data."""
    centers = boundary_centers(unit_square, 8)
    lift = build_rbf_lift(_samples(centers, with_laplacian=True), centers, 1.0)
    for profile in lift.time_profiles:
        assert set(profile.exponents) <= {0.0, 3.0}


def test_rbf_lift_validation(unit_square):
    """Shape parameter, condition count and kinds are checked."""
    centers = boundary_centers(unit_square, 4)
    with pytest.raises(ProblemValidationError):
        build_rbf_lift(_samples(centers), centers, 0.0)
    with pytest.raises(ProblemValidationError):
        build_rbf_lift(_samples(centers[:2]), centers, 1.0)
    bad = [BoundarySample(point, "neumann", PowerProfile.monomial(1.0, 1)) for point in centers]
    with pytest.raises(ProblemValidationError):
        build_rbf_lift(bad, centers, 1.0)


def test_rbf_lift_of_zero_data(unit_square):
    """No exponents, no lift."""
    centers = boundary_centers(unit_square, 4)
    samples = [BoundarySample(point, "value", PowerProfile.zero()) for point in centers]
    assert build_rbf_lift(samples, centers, 1.0).is_zero


def test_lift_caputo_term(unit_square):
    """Σ (symbol ψ_i)(x) D^α γ_i(t), or γ_i(t) without an order."""
    centers = boundary_centers(unit_square, 8)
    lift = build_rbf_lift(_samples(centers), centers, 1.0)
    x = np.array([[0.3, 0.6], [0.8, 0.2]])
    order = OrderFunction.constant(0.5, 1.0)
    expected = sum(
        shape.laplacian(x) * caputo_profile(profile, order, 0.7)
        for shape, profile in zip(lift.shapes, lift.time_profiles)
    )
    np.testing.assert_allclose(lift_caputo_term(lift, order, LAPLACIAN, x, 0.7), expected, rtol=1e-13)
    np.testing.assert_allclose(
        lift_caputo_term(lift, None, IDENTITY, x, 0.7), lift.value(x, 0.7), rtol=1e-13
    )


def test_lift_initial_derivative(unit_square):
    """∂s/∂t at t=0 vanishes for data without a linear term."""
    centers = boundary_centers(unit_square, 8)
    lift = build_rbf_lift(_samples(centers), centers, 1.0)
    x = np.array([[0.4, 0.4]])
    np.testing.assert_allclose(lift_initial_derivative(lift, 0, x), lift.value(x, 0.0), rtol=1e-13)
    np.testing.assert_allclose(lift_initial_derivative(lift, 1, x), [0.0], atol=1e-15)


def test_corrected_lift_meets_value_and_laplacian_data():
    """With Δu data the corrected lift matches both conditions all along Γ."""
    problem = example8_problem()
    lift = build_lift(problem, 6, c_mq=8.0)
    assert lift.metadata.correction_degree == LIFT_CORRECTION_DEGREE
    assert lift.metadata.fit_residual < FIT_TOLERANCE
    assert not lift.metadata.ill_conditioned

    # Points between the fitted samples, corners excluded.
    points = boundary_centers(problem.domain, 101)[1:]
    scale = 2 * np.e**2
    for t in (0.3, 1.0):
        value_gap = lift.value(points, t) - problem.boundary.value.value(points, t)
        laplacian_gap = lift_caputo_term(lift, None, LAPLACIAN, points, t) - problem.boundary.laplacian.value(points, t)
        assert np.max(np.abs(value_gap)) <= 1e-7 * scale
        assert np.max(np.abs(laplacian_gap)) <= 1e-5 * scale


def test_uncorrected_flat_lift_is_flagged():
    """A plain c_MQ = 8 lift cannot carry value and Δu data together."""
    problem = example8_problem()
    with pytest.warns(IllConditionedWarning):
        lift = build_lift(problem, 6, c_mq=8.0, lift_degree=0)
    assert lift.metadata.ill_conditioned
    assert lift.metadata.correction_degree is None


def test_legendre_correction_needs_a_box(unit_interval):
    """The correction is built for two-dimensional boxes only."""
    centers = boundary_centers(BoxDomain((1.0, 1.0)), 8)
    correction = LiftCorrection(_samples(centers), unit_interval, 4)
    with pytest.raises(ProblemValidationError):
        build_rbf_lift(_samples(centers), centers, 1.0, correction=correction)
