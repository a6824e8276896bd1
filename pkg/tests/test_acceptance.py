"""Full-resolution runs against reference error levels.

Deselect with ``-m "not slow"``.
"""
import numpy as np
import pytest

from fracspec.services.benchmarks import EXAMPLE2_CN_FDM, EXAMPLE5_REFERENCE, run_example, run_oracle

pytestmark = pytest.mark.slow

FINE = {"test_points": 101, "test_times": 101}


def _within(value: float, reference: float, factor: float) -> bool:
    return reference / factor <= value <= reference * factor


def _column(table, name):
    index = table.header.index(name)
    return [row[index] for row in table.rows]


def test_example1_spectral_floor():
    """Rerr decays with K to the round-off floor at T = 1."""
    (table,) = run_example(1, {"delta": 0.25, "T": 1.0, "test_times": 101}).tables
    errors = _column(table, "Rerr(delta=0.25)")
    assert _within(errors[0], 2.14e-2, 5)
    assert errors[-1] <= 1e-13
    assert all(later <= earlier for earlier, later in zip(errors, errors[1:]))


def test_example1_extreme_horizons():
    """Short and long horizons stay at the floor."""
    (short,) = run_example(1, {"delta": 0.25, "T": 0.01, "K": 3, "test_times": 101}).tables
    assert short.rows[0][1] <= 1e-12
    (long,) = run_example(1, {"delta": 0.25, "T": 100.0, "K": 9, "test_times": 101}).tables
    assert long.rows[0][1] <= 1e-12


def test_example2_exact_span():
    """t² lies in the K = 5 basis; the K = 4 fit stays below the comparison levels."""
    (table,) = run_example(2, FINE).tables
    assert all(value <= 1e-13 for value in _column(table, "Merr(K=5)"))
    reference = {0.1: 7.43e-4, 0.2: 8.17e-4, 0.3: 1.58e-4, 0.4: 2.70e-4, 0.5: 4.19e-4}
    for T, k3, k4, k5, fdm in table.rows:
        assert k4 <= 5 * reference[T]
        assert k3 >= k4 >= k5
        assert fdm == EXAMPLE2_CN_FDM[T]


def _sine_truncation_error(N: int, test_points: int) -> float:
    """max |40x²(1−x) − Σ_{n≤N} c_n sin(nπx)| on the interior test grid."""
    x = np.arange(1, test_points + 1) / (test_points + 1)
    n = np.arange(1, N + 1)
    c = -160.0 * (1 + 2 * (-1.0) ** n) / (n * np.pi) ** 3
    series = np.sin(np.pi * np.outer(x, n)) @ c
    return float(np.max(np.abs(40 * x**2 * (1 - x) - series)))


@pytest.mark.parametrize("N", [100, 200, 250])
def test_example3_spatial_truncation(N):
    """(t+1)² lies in the K ≥ 5 span, so Merr is the sine-series tail of u(·, 1)."""
    (table,) = run_example(3, {"N": N, **FINE}).tables
    errors = {row[0]: row[1] for row in table.rows}
    expected = _sine_truncation_error(N, FINE["test_points"])
    for K in (5, 6, 7, 8):
        assert errors[K] == pytest.approx(expected, rel=1e-2)
    assert errors[4] >= errors[5]


def test_example4_convergence():
    """At least second-order decay in N, insensitive to δ."""
    (table,) = run_example(4, {"K": 4, **FINE}).tables
    Ns = _column(table, "N")
    orders = _column(table, "CO(delta=0.25)")
    assert all(order >= 2.3 for N, order in zip(Ns, orders) if N >= 40)
    final = table.rows[-1]
    assert final[0] == 320
    rerrs = [final[i] for i in (1, 3, 5)]
    assert max(rerrs) <= 1e-8
    assert max(rerrs) - min(rerrs) <= 5e-3 * max(rerrs)


def test_example5_complex_field():
    """Re u error from truncation, Im u at round-off for constant orders."""
    result = run_example(5, FINE)
    (table,) = result.tables
    for alpha, N, K, re_error, im_error, *reference in table.rows:
        assert im_error <= 1e-12
        assert tuple(reference) in EXAMPLE5_REFERENCE[f"{alpha:g}"]
        if (N, K) == (80, 5):
            assert _within(re_error, 2.98e-5, 3)
    (plot,) = result.plots
    for kind in ("4^(t-1)", "e^t/3"):
        errors = [row[2] for row in plot.rows if row[0] == kind]
        assert all(later < earlier for earlier, later in zip(errors, errors[1:]))


def test_example6_order_pair_invariance():
    """Both order pairs give the same error at N = 256."""
    (table,) = run_example(6, {"N": 256, "K": 5, **FINE}).tables
    first, second = table.rows[0][1], table.rows[0][3]
    assert _within(first, 5.04e-7, 3)
    assert abs(first - second) <= 5e-3 * first


def test_example7_rbf_lift():
    """u and ∂u/∂x₁ errors of the 2D damped wave-diffusion problem."""
    (table,) = run_example(7, {"N": 25, "K": 4, **FINE}).tables
    _, u_error, gradient_error = table.rows[0]
    assert _within(u_error, 2.03e-5, 3)
    assert _within(gradient_error, 1.80e-3, 3)


def test_example8_error_pattern():
    """Small error peaking away from Γ."""
    (table,) = run_example(8, {"N": 36, "K": 5, **FINE}).tables
    _, _, total, central, frame, _ = table.rows[0]
    assert total <= 1e-3
    assert central >= frame


@pytest.mark.parametrize("example_id", [2, 3])
def test_oracle_agreement(example_id):
    """Spectral and L1 solutions agree within the oracle's own error estimate."""
    (table,) = run_oracle(example_id).tables
    row = dict(zip(table.header, table.rows[0]))
    assert row["max|spectral-FDM|"] <= 3 * row["Richardson estimate"]
