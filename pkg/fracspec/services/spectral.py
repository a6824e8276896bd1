"""Sine-series machinery: modes, Gauss–Legendre projections and boundary centers."""
from __future__ import annotations

import itertools
import math
from typing import Callable, Sequence

import numpy as np
from numpy.polynomial.legendre import leggauss

from fracspec.checks import require_int_at_least
from fracspec.errors import DomainError
from fracspec.models import BoxDomain, SineMode

# Extra points per dimension over π·N/2 so the highest mode is still resolved
RESOLUTION_MARGIN = 16


def enumerate_modes(domain: BoxDomain, N_per_dim: int) -> list[SineMode]:
    """All multi-indices 1 <= n_i <= N, lexicographic."""
    require_int_at_least("N_per_dim", N_per_dim, 1)
    return [
        SineMode(index, domain) for index in itertools.product(range(1, N_per_dim + 1), repeat=domain.d)
    ]


def gauss_legendre(order: int, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the order-point rule on [a, b]."""
    require_int_at_least("quadrature order", order, 1)
    nodes, weights = leggauss(order)
    half = (b - a) / 2
    return a + half * (nodes + 1), half * weights


def resolved_order(order: int, N_per_dim: int) -> int:
    """Quadrature order raised to at least ⌈πN/2⌉ + RESOLUTION_MARGIN."""
    return max(order, math.ceil(math.pi * N_per_dim / 2) + RESOLUTION_MARGIN)


def tensor_rule(domain: BoxDomain, order: int) -> tuple[np.ndarray, np.ndarray]:
    """Tensor Gauss–Legendre points (Q^d, d) and weights (Q^d,) on the box."""
    rules = [gauss_legendre(order, 0.0, length) for length in domain.lengths]
    grids = np.meshgrid(*[nodes for nodes, _ in rules], indexing="ij")
    points = np.stack([grid.ravel() for grid in grids], axis=-1)
    weights = np.ones(1)
    for _, w in rules:
        weights = np.multiply.outer(weights, w).ravel()
    return points, weights


def sine_table(modes: Sequence[SineMode], points: np.ndarray) -> np.ndarray:
    """Mode values Π sin(n_i π x_i / L_i) as a (points × modes) array."""
    if not modes:
        return np.zeros(points.shape[:-1] + (0,))
    indices = np.array([mode.index for mode in modes], dtype=float)  # (M, d)
    lengths = np.asarray(modes[0].domain.lengths)
    # (..., d, 1) * (d, M) -> per-dimension factors
    arg = points[..., :, None] * (indices.T * np.pi / lengths[:, None])
    return np.prod(np.sin(arg), axis=-2)


def sine_gradient_table(modes: Sequence[SineMode], points: np.ndarray, axis: int) -> np.ndarray:
    indices = np.array([mode.index for mode in modes], dtype=float)
    lengths = np.asarray(modes[0].domain.lengths)
    k = indices.T * np.pi / lengths[:, None]
    arg = points[..., :, None] * k
    factors = np.sin(arg)
    factors[..., axis, :] = k[axis] * np.cos(arg[..., axis, :])
    return np.prod(factors, axis=-2)


def _check_finite(values: np.ndarray, points: np.ndarray) -> None:
    bad = ~np.isfinite(values)
    if np.any(bad):
        where = points[np.argmax(bad)]
        raise DomainError(f"non-finite sample at quadrature node x={np.round(where, 12).tolist()}")


def project_onto_mode(f: Callable[[np.ndarray], np.ndarray], mode: SineMode, quadrature_order: int) -> float | complex:
    """(2^d/ΠL) ∫ f(x) Π sin(n_i π x_i / L_i) dx by tensor Gauss–Legendre."""
    domain = mode.domain
    points, weights = tensor_rule(domain, quadrature_order)
    values = np.asarray(f(points))
    _check_finite(values, points)
    integral = np.sum(weights * values * mode.value(points)) * 2**domain.d / domain.volume
    return integral.item()


class SineProjector:
    """Projection of sampled fields onto every mode of a truncation at once."""

    def __init__(self, domain: BoxDomain, modes: Sequence[SineMode], quadrature_order: int):
        self.domain = domain
        self.modes = list(modes)
        self.quadrature_order = quadrature_order
        self.points, weights = tensor_rule(domain, quadrature_order)
        self._table = (sine_table(self.modes, self.points) * weights[:, None]).T * (2**domain.d / domain.volume)

    def project_values(self, values: np.ndarray) -> np.ndarray:
        values = np.asarray(values)
        _check_finite(values, self.points)
        return self._table @ values

    def project(self, f: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
        return self.project_values(f(self.points))


def boundary_centers(domain: BoxDomain, count: int) -> np.ndarray:
    """count points uniform in arc length along Γ, starting at the origin corner.

    The walk goes (0,0) → (L1,0) → (L1,L2) → (0,L2). In 1D the centers are the
    two endpoints.
    """
    if domain.d == 1:
        if count != 2:
            raise DomainError("a 1D boundary has exactly two points")
        return np.array([[0.0], [domain.lengths[0]]])
    require_int_at_least("center count", count, 1)
    L1, L2 = domain.lengths
    perimeter = 2 * (L1 + L2)
    s = np.arange(count) * perimeter / count
    corners = np.array([[0.0, 0.0], [L1, 0.0], [L1, L2], [0.0, L2], [0.0, 0.0]])
    edges = np.array([L1, L2, L1, L2])
    starts = np.concatenate([[0.0], np.cumsum(edges)[:-1]])
    side = np.clip(np.searchsorted(starts, s, side="right") - 1, 0, 3)
    frac = (s - starts[side]) / edges[side]
    return corners[side] + frac[:, None] * (corners[side + 1] - corners[side])
