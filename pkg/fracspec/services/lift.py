"""Boundary lifts: affine in 1D, multiquadric RBF in 2D."""
from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from numpy.polynomial import legendre as nleg

from fracspec.checks import require_int_at_least
from fracspec.errors import IllConditionedWarning, ProblemValidationError, UnsupportedExponentError
from fracspec.models import (
    BoxDomain,
    LegendreSeries,
    LiftFunction,
    LiftMetadata,
    Multiquadric,
    OrderFunction,
    Polynomial,
    PowerProfile,
    SpatialSymbol,
)
from fracspec.services.caputo import apply_time_operator, derivative_profile
from fracspec.services.linalg import least_squares

logger = logging.getLogger("fracspec.lift")

CONDITION_KINDS = ("value", "laplacian")


@dataclass(frozen=True)
class BoundarySample:
    point: np.ndarray
    kind: str
    datum: PowerProfile


def build_linear_lift_1d(g_left: PowerProfile, g_right: PowerProfile, domain: BoxDomain) -> LiftFunction:
    """s = g_left·(1 − x/L) + g_right·x/L."""
    if domain.d != 1:
        raise ProblemValidationError("the affine lift is one-dimensional")
    L = domain.lengths[0]
    shapes, profiles = [], []
    for shape, profile in ((Polynomial(np.array([1.0, -1.0 / L])), g_left), (Polynomial(np.array([0.0, 1.0 / L])), g_right)):
        if not profile.is_zero:
            shapes.append(shape)
            profiles.append(profile)
    kind = "linear-1d" if shapes else "zero"
    return LiftFunction(tuple(shapes), tuple(profiles), LiftMetadata(kind))


# Largest acceptable max |fit − data| / (1 + max |data|) on the boundary samples
FIT_TOLERANCE = 1e-8
# Pivot cut-off of the MQ part when a polynomial correction carries the rest
CORRECTED_RCOND = 1e-8


@dataclass(frozen=True)
class LiftCorrection:
    """Legendre polynomial of total degree ≤ degree fitted to what the RBF part leaves on Γ."""

    samples: Sequence[BoundarySample]
    domain: BoxDomain
    degree: int


def _data_matrix(samples: Sequence[BoundarySample], exponents: list[float]) -> np.ndarray:
    column = {p: j for j, p in enumerate(exponents)}
    B = np.zeros((len(samples), len(exponents)), dtype=complex)
    for i, sample in enumerate(samples):
        if sample.kind not in CONDITION_KINDS:
            raise ProblemValidationError(f"unsupported boundary condition kind {sample.kind!r}")
        for term in sample.datum.terms:
            B[i, column[term.exponent]] = term.coefficient
    return B


def _rbf_matrix(samples: Sequence[BoundarySample], shapes: Sequence[Multiquadric]) -> np.ndarray:
    points = np.array([sample.point for sample in samples], dtype=float)
    is_value = np.array([sample.kind == "value" for sample in samples])
    A = np.empty((len(samples), len(shapes)))
    for j, shape in enumerate(shapes):
        A[:, j] = np.where(is_value, shape.value(points), shape.laplacian(points))
    return A


def _legendre_matrix(samples: Sequence[BoundarySample], domain: BoxDomain, degree: int) -> tuple[np.ndarray, list]:
    """Columns P_i(ξ1)P_j(ξ2), i + j ≤ degree, or their Laplacians on Δu rows."""
    points = np.array([sample.point for sample in samples], dtype=float)
    scales = 2.0 / np.asarray(domain.lengths)
    xi = 2.0 * points / np.asarray(domain.lengths) - 1.0
    second = nleg.legder(np.eye(degree + 1), 2, axis=0)
    V = [nleg.legvander(xi[:, a], degree) for a in range(2)]
    V2 = [V[a][:, : second.shape[0]] @ second * scales[a] ** 2 for a in range(2)]
    is_value = np.array([sample.kind == "value" for sample in samples])
    pairs = [(i, j) for i in range(degree + 1) for j in range(degree + 1 - i)]
    A = np.empty((len(samples), len(pairs)))
    for k, (i, j) in enumerate(pairs):
        values = V[0][:, i] * V[1][:, j]
        laplacians = V2[0][:, i] * V[1][:, j] + V[0][:, i] * V2[1][:, j]
        A[:, k] = np.where(is_value, values, laplacians)
    return A, pairs


def build_rbf_lift(
    samples: Sequence[BoundarySample],
    centers: np.ndarray,
    c_mq: float,
    *,
    correction: Optional[LiftCorrection] = None,
) -> LiftFunction:
    """Fit γ_j(t) per time exponent so Σ ψ_j γ_j meets every boundary condition.

    The MQ part interpolates the condition samples at the centers. With a
    correction, a Legendre polynomial on the box is added and fitted by least
    squares to the residual left on the (denser) correction samples; flat
    kernels resolve only a low-degree span, which is not enough for value and
    Δu data together.
    """
    if c_mq <= 0:
        raise ProblemValidationError(f"c_MQ must be positive, got {c_mq}")
    centers = np.atleast_2d(np.asarray(centers, dtype=float))
    if len(samples) < len(centers):
        raise ProblemValidationError(f"{len(samples)} boundary conditions cannot fix {len(centers)} centers")
    fit_samples = list(correction.samples) if correction is not None else list(samples)
    exponents = sorted({term.exponent for sample in (*samples, *fit_samples) for term in sample.datum.terms})
    shapes = tuple(Multiquadric(center, c_mq) for center in centers)
    if not exponents:
        return LiftFunction((), (), LiftMetadata("zero", centers=centers, c_mq=c_mq))

    rcond = CORRECTED_RCOND if correction is not None else None
    result = least_squares(_rbf_matrix(samples, shapes), _data_matrix(samples, exponents), rcond)
    if not result.full_rank:
        logger.info("RBF lift matrix has numerical rank %d < %d centers (c_MQ=%g)", result.rank, len(shapes), c_mq)
    B = _data_matrix(fit_samples, exponents)
    fitted = _rbf_matrix(fit_samples, shapes) @ result.solution
    extra_shapes: list = []
    extra_profiles: list = []
    degree = None
    if correction is not None:
        if correction.domain.d != 2:
            raise ProblemValidationError("the lift correction is two-dimensional")
        degree = correction.degree
        require_int_at_least("lift correction degree", degree, 0)
        A_poly, pairs = _legendre_matrix(fit_samples, correction.domain, degree)
        poly = least_squares(A_poly, B - fitted)
        fitted = fitted + A_poly @ poly.solution
        for j, p in enumerate(exponents):
            coefficients = np.zeros((degree + 1, degree + 1), dtype=complex)
            for k, (a, b) in enumerate(pairs):
                coefficients[a, b] = poly.solution[k, j]
            extra_shapes.append(LegendreSeries(coefficients, correction.domain.lengths))
            extra_profiles.append(PowerProfile.monomial(1.0, p))

    fit_residual = float(np.max(np.abs(fitted - B))) / (1.0 + float(np.max(np.abs(B))))
    ill_conditioned = fit_residual > FIT_TOLERANCE
    if ill_conditioned:
        message = (
            f"RBF lift misses the boundary data by {fit_residual:.3e} "
            f"(rank {result.rank} of {len(shapes)} centers, c_MQ={c_mq:g})"
        )
        warnings.warn(message, IllConditionedWarning, stacklevel=2)
        logger.warning(message)
    logger.debug(
        "RBF lift: %d centers, %d conditions, exponents %s, correction degree %s",
        len(shapes), len(fit_samples), exponents, degree,
    )

    profiles = tuple(
        PowerProfile.from_pairs(zip(result.solution[j], exponents)) for j in range(len(shapes))
    )
    metadata = LiftMetadata(
        "mq-rbf", centers=centers, c_mq=c_mq, fit_residual=fit_residual, rank=result.rank,
        ill_conditioned=ill_conditioned, correction_degree=degree,
    )
    return LiftFunction(shapes + tuple(extra_shapes), profiles + tuple(extra_profiles), metadata)


def lift_caputo_term(
    lift: LiftFunction, order: Optional[OrderFunction], symbol: SpatialSymbol, x: np.ndarray, t: float
) -> np.ndarray:
    """Σ_i (symbol ψ_i)(x) · D^{order} γ_i(t); plain γ_i(t) when order is None."""
    total = np.zeros(np.shape(x)[:-1], dtype=complex)
    for i, (shape, profile) in enumerate(zip(lift.shapes, lift.time_profiles)):
        if profile.is_zero:
            continue
        try:
            factor = apply_time_operator(profile, order, t)
        except UnsupportedExponentError as exc:
            raise UnsupportedExponentError(exc.exponent, f"lift profile {i}: {exc}") from exc
        if factor != 0:
            total = total + shape.apply(symbol, x) * factor
    return total


def lift_initial_derivative(lift: LiftFunction, i: int, x: np.ndarray) -> np.ndarray:
    """∂ᵢs/∂tᵢ(x, 0)."""
    total = np.zeros(np.shape(x)[:-1], dtype=complex)
    for k, (shape, profile) in enumerate(zip(lift.shapes, lift.time_profiles)):
        try:
            value = derivative_profile(profile, i).evaluate(0.0)
        except UnsupportedExponentError as exc:
            raise UnsupportedExponentError(exc.exponent, f"lift profile {k}: {exc}") from exc
        if value != 0:
            total = total + shape.value(x) * value
    return total
