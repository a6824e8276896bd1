"""Tests for the error metrics."""
import math

import numpy as np
import pytest

from fracspec.errors import DomainError
from fracspec.models import BoxDomain, PowerProfile, SeparableField, SineProduct
from fracspec.services.metrics import INFINITE_ORDER, ao, co, error_report, merr, relative_error, rerr, sample_points, sample_times


def _exact(x, t):
    return np.sin(3 * x[..., 0]) * np.cos(x[..., -1]) * (1 + t**2) + 1j * x[..., 0] * t


def _approx(x, t):
    return _exact(x, t) + 1e-3 * np.cos(7 * x[..., 0] + t) - 2e-4j * x[..., -1] ** 2


def _loop_errors(domain, N_t, times):
    """Straightforward nested loops over the test grid."""
    axes = [[L * (i + 1) / (N_t + 1) for i in range(N_t)] for L in domain.lengths]
    points = [[a] for a in axes[0]] if domain.d == 1 else [[a, b] for a in axes[0] for b in axes[1]]
    max_abs, num, den = 0.0, 0.0, 0.0
    for t in times:
        for p in points:
            x = np.array(p)
            e = complex(_exact(x, t))
            diff = abs(e - complex(_approx(x, t)))
            if t == times[-1]:
                max_abs = max(max_abs, diff)
            num += diff**2
            den += abs(e) ** 2
    return max_abs, num / den


@pytest.mark.parametrize("lengths", [(1.0,), (2.0, 0.5)])
def test_metrics_match_independent_loop(lengths):
    """Vectorized Merr and Rerr agree with a plain loop."""
    domain = BoxDomain(lengths)
    N_t, K_t, T = 9, 5, 0.8
    times = [T * k / (K_t - 1) for k in range(K_t)]
    loop_merr, loop_rerr = _loop_errors(domain, N_t, times)
    assert merr(_exact, _approx, T, N_t, domain=domain) == pytest.approx(loop_merr, rel=1e-14, abs=1e-14)
    assert rerr(_exact, _approx, T, N_t, K_t, domain=domain) == pytest.approx(loop_rerr, rel=1e-14, abs=1e-14)
    assert relative_error(_exact, _approx, T, N_t, K_t, domain=domain) == pytest.approx(math.sqrt(loop_rerr), rel=1e-13)


def test_identical_fields_have_zero_error(unit_interval):
    """approx ≡ exact gives 0."""
    assert merr(_exact, _exact, 1.0, 11, domain=unit_interval) == 0.0
    assert rerr(_exact, _exact, 1.0, 11, 11, domain=unit_interval) == 0.0


def test_parts_are_reported_separately(unit_interval):
    """Real and imaginary errors come from the respective parts."""
    shifted = lambda x, t: _exact(x, t) + 1e-3j
    assert merr(_exact, shifted, 1.0, 11, part="real", domain=unit_interval) == 0.0
    assert merr(_exact, shifted, 1.0, 11, part="imag", domain=unit_interval) == pytest.approx(1e-3)
    with pytest.raises(DomainError):
        merr(_exact, shifted, 1.0, 11, part="modulus", domain=unit_interval)


def test_gradient_component(unit_interval):
    """axis selects ∂/∂x of a separable exact field."""
    field = SeparableField(((SineProduct(1.0, [2.0], [0.0]), PowerProfile.monomial(1.0, 1)),))
    derivative = lambda x, t: 2 * np.cos(2 * x[..., 0]) * t
    assert merr(field, derivative, 0.7, 15, axis=0, domain=unit_interval) == pytest.approx(0.0, abs=1e-15)


def test_zero_exact_field_is_rejected(unit_interval):
    """Rerr needs a non-zero reference."""
    zero = lambda x, t: np.zeros(x.shape[:-1])
    with pytest.raises(DomainError):
        rerr(zero, _exact, 1.0, 5, 5, domain=unit_interval)


def test_domain_required_for_callables():
    """Callables carry no domain of their own."""
    with pytest.raises(DomainError):
        merr(_exact, _approx, 1.0, 5)


def test_convergence_order():
    """log2 of the error ratio."""
    assert co(4e-6, 1e-6) == pytest.approx(2.0)
    assert co(1e-6, 0.0) == INFINITE_ORDER


def test_approximation_order():
    """log(err)/log(1/K)."""
    assert ao(1e-4, 10) == pytest.approx(4.0)
    assert ao(0.0, 5) == math.inf
    with pytest.raises(DomainError):
        ao(1e-3, 1)


def test_sample_grids(unit_square):
    """Interior points and uniform times including both ends."""
    points = sample_points(unit_square, 3)
    assert points.shape == (9, 2)
    np.testing.assert_allclose(np.unique(points[:, 0]), [0.25, 0.5, 0.75])
    np.testing.assert_allclose(sample_times(2.0, 5), [0.0, 0.5, 1.0, 1.5, 2.0])
    np.testing.assert_array_equal(sample_times(2.0, 1), [2.0])


def test_error_report(unit_interval):
    """Both metrics with the test-grid sizes and run parameters."""
    report = error_report(_exact, _approx, 1.0, 9, 5, parameters={"N": 4}, domain=unit_interval)
    assert report.merr == merr(_exact, _approx, 1.0, 9, domain=unit_interval)
    assert report.rerr == relative_error(_exact, _approx, 1.0, 9, 5, domain=unit_interval)
    assert (report.n_t, report.k_t) == (9, 5)
    assert report.parameters == {"N": 4}
    assert report.co is None


def test_relative_error_is_root_of_ratio(unit_interval):
    """A uniform 1% perturbation reads as 1e-2, its squared ratio as 1e-4."""
    scaled = lambda x, t: 1.01 * _exact(x, t)
    assert relative_error(_exact, scaled, 1.0, 11, 6, domain=unit_interval) == pytest.approx(1e-2, rel=1e-10)
    assert rerr(_exact, scaled, 1.0, 11, 6, domain=unit_interval) == pytest.approx(1e-4, rel=1e-10)


def test_approximation_order_uses_root_error():
    """An error of 2.14e-2 at K = 3 is order 3.5."""
    assert ao(2.14e-2, 3) == pytest.approx(3.4988, abs=1e-3)
