"""Full PDE solve: lift, homogenize, split into sine modes, solve each mode ODE.

Sign bookkeeping: with u = v + s the homogenized forcing is

    Θ = f − D^α s − Σ_lhs a_i D^{α_i} s + Σ_rhs a_i D^{α_i}(symbol s)

and mode n of v obeys D^α w = Σ β_i D^{α_i} w + β_0 w + θ_n with β_i = −a_i
for left-hand terms and β_i = a_i λ(n) for right-hand terms. Terms without a
time derivative (order None) feed β_0.
"""
from __future__ import annotations

import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Callable, Optional, Sequence

import numpy as np

import config
from fracspec.checks import require_time_in_range
from fracspec.errors import DomainError, FracspecError, ProblemValidationError
from fracspec.models import (
    IDENTITY,
    BoundaryData,
    BoxDomain,
    LiftFunction,
    LinearCombination,
    MuntzBasis,
    OrderFunction,
    PdeProblem,
    PdeSolution,
    PdeTerm,
    ScaledTime,
    SeparableField,
    SineMode,
    SpatialFunction,
    SumTime,
    Translated,
    VotfOdeProblem,
    VotfOdeSolution,
    as_points,
    evaluate_time_function,
)
from fracspec.services.caputo import apply_time_operator, caputo_profile, derivative_profile
from fracspec.services.lift import (
    BoundarySample,
    LiftCorrection,
    build_linear_lift_1d,
    build_rbf_lift,
    lift_caputo_term,
    lift_initial_derivative,
)
from fracspec.services.muntz_bsm import gc_points, solve_votfode, with_context
from fracspec.services.spectral import (
    SineProjector,
    boundary_centers,
    enumerate_modes,
    resolved_order,
    sine_gradient_table,
    sine_table,
)

logger = logging.getLogger("fracspec.pipeline")

DEFAULT_C_MQ = 4.0
# Legendre correction degree used with Δu boundary data
LIFT_CORRECTION_DEGREE = 12


@dataclass(frozen=True)
class SolveOptions:
    N_per_dim: int
    K: int
    delta: float = config.DEFAULT_DELTA
    quadrature_order: Optional[int] = None
    c_mq: float = DEFAULT_C_MQ
    n_centers: Optional[int] = None
    workers: Optional[int] = None
    collocation_count: Optional[int] = None
    lift_degree: Optional[int] = None


# --- Ingestion ---


@dataclass(frozen=True, eq=False)
class _ScaledForcing:
    scale: complex
    inner: Callable

    def __call__(self, x: np.ndarray, t: float) -> np.ndarray:
        return self.scale * np.asarray(self.inner(x, t))


def normalize(problem: PdeProblem) -> PdeProblem:
    """Divide the equation through by a non-unit leading coefficient."""
    c = complex(problem.leading_coefficient)
    if c == 1:
        return problem
    inv = 1.0 / c
    terms = tuple(replace(term, coefficient=ScaledTime(inv, term.coefficient)) for term in problem.terms)
    return replace(
        problem,
        terms=terms,
        forcing=_ScaledForcing(inv, problem.forcing),
        leading_coefficient=1.0,
        scalar_field="complex" if c.imag != 0 else problem.scalar_field,
    )


def translate_field(field: SeparableField, offset: Sequence[float]) -> SeparableField:
    """field evaluated at y + offset, for boxes whose origin is not 0."""
    return SeparableField(tuple((Translated(fn, np.asarray(offset)), profile) for fn, profile in field.terms))


@dataclass(frozen=True, eq=False)
class ManufacturedPdeForcing:
    """f such that a separable exact field satisfies the problem's operator."""

    leading_order: OrderFunction
    terms: tuple[PdeTerm, ...]
    exact: SeparableField
    leading_coefficient: complex = 1.0

    def __call__(self, x: np.ndarray, t: float) -> np.ndarray:
        total = np.zeros(np.shape(x)[:-1], dtype=complex)
        for fn, profile in self.exact.terms:
            value = fn.value(x)
            total = total + self.leading_coefficient * value * caputo_profile(profile, self.leading_order, t)
            for term in self.terms:
                a = complex(evaluate_time_function(term.coefficient, np.asarray(t)))
                time_part = apply_time_operator(profile, term.order, t)
                if term.side == "lhs":
                    total = total + a * value * time_part
                else:
                    total = total - a * fn.apply(term.symbol, x) * time_part
        return total


def manufactured_pde_forcing(
    leading_order: OrderFunction, terms: Sequence[PdeTerm], exact: SeparableField, leading_coefficient: complex = 1.0
) -> ManufacturedPdeForcing:
    return ManufacturedPdeForcing(leading_order, tuple(terms), exact, leading_coefficient)


def boundary_from_exact(exact: SeparableField, with_laplacian: bool = False) -> BoundaryData:
    return BoundaryData(value=exact, laplacian=exact.laplacian_field() if with_laplacian else None)


def initial_from_exact(exact: SeparableField, m: int) -> tuple[SpatialFunction, ...]:
    """h_i(x) = ∂ᵢu/∂tᵢ(x, 0) for i < m."""
    initial = []
    for i in range(m):
        parts = tuple(
            (complex(derivative_profile(profile, i).evaluate(0.0)), fn) for fn, profile in exact.terms
        )
        initial.append(LinearCombination(parts))
    return tuple(initial)


# --- Homogenization ---


@dataclass(frozen=True, eq=False)
class HomogenizedForcing:
    """Θ(x, t) for v = u − s.

    Θ = f − D^α s − Σ_lhs a D^{α_i} s + Σ_rhs a D^{α_i}(symbol s), so that v
    solves the same equation as u with forcing Θ.
    """

    problem: PdeProblem
    lift: LiftFunction

    def __call__(self, x: np.ndarray, t: float) -> np.ndarray:
        theta = np.asarray(self.problem.forcing(x, t), dtype=complex)
        theta = np.broadcast_to(theta, np.shape(x)[:-1]).copy()
        if self.lift.is_zero:
            return theta
        theta -= lift_caputo_term(self.lift, self.problem.leading_order, IDENTITY, x, t)
        for term in self.problem.terms:
            a = complex(evaluate_time_function(term.coefficient, np.asarray(t)))
            if a == 0:
                continue
            if term.side == "lhs":
                theta -= a * lift_caputo_term(self.lift, term.order, IDENTITY, x, t)
            else:
                theta += a * lift_caputo_term(self.lift, term.order, term.symbol, x, t)
        return theta


@dataclass(frozen=True, eq=False)
class HomogenizedInitial:
    """v_i(x) = h_i(x) − ∂ᵢs/∂tᵢ(x, 0)."""

    h: Callable[[np.ndarray], np.ndarray]
    lift: LiftFunction
    i: int

    def __call__(self, x: np.ndarray) -> np.ndarray:
        values = np.asarray(self.h(x), dtype=complex)
        return values - lift_initial_derivative(self.lift, self.i, x)


@dataclass(frozen=True, eq=False)
class Homogenized:
    theta: HomogenizedForcing
    initial: tuple[HomogenizedInitial, ...]


def homogenize(problem: PdeProblem, lift: LiftFunction) -> Homogenized:
    initial = tuple(HomogenizedInitial(h, lift, i) for i, h in enumerate(problem.initial))
    return Homogenized(HomogenizedForcing(problem, lift), initial)


def build_lift(
    problem: PdeProblem,
    N_per_dim: int,
    c_mq: float = DEFAULT_C_MQ,
    n_centers: Optional[int] = None,
    lift_degree: Optional[int] = None,
) -> LiftFunction:
    """Affine lift for 1D Dirichlet data, multiquadric RBF lift in 2D.

    lift_degree adds a Legendre correction of that total degree to the RBF
    lift; None picks LIFT_CORRECTION_DEGREE when Δu data are given and no
    correction otherwise.
    """
    boundary = problem.boundary
    if boundary.is_homogeneous:
        return LiftFunction.zero()
    domain = problem.domain
    if domain.d == 1:
        if boundary.laplacian is not None:
            raise ProblemValidationError("Δu boundary data needs the 2D RBF lift")
        L = domain.lengths[0]
        return build_linear_lift_1d(
            boundary.value.profile_at(np.array([0.0])), boundary.value.profile_at(np.array([L])), domain
        )
    count = n_centers if n_centers is not None else 4 * N_per_dim - 4
    centers = boundary_centers(domain, max(count, 1))
    samples = _boundary_samples(boundary, centers)
    if lift_degree is None:
        lift_degree = LIFT_CORRECTION_DEGREE if boundary.laplacian is not None else 0
    correction = None
    if lift_degree > 0:
        dense = boundary_centers(domain, max(4 * count, 16 * (lift_degree + 1)))
        correction = LiftCorrection(_boundary_samples(boundary, dense), domain, lift_degree)
    return build_rbf_lift(samples, centers, c_mq, correction=correction)


def _boundary_samples(boundary: BoundaryData, points: np.ndarray) -> list[BoundarySample]:
    samples = []
    for point in points:
        if boundary.value is not None:
            samples.append(BoundarySample(point, "value", boundary.value.profile_at(point)))
        if boundary.laplacian is not None:
            samples.append(BoundarySample(point, "laplacian", boundary.laplacian.profile_at(point)))
    return samples


# --- Mode problems ---


@dataclass(frozen=True, eq=False)
class ForcingTable:
    """Θ projections onto all modes, cached per time (thread-safe)."""

    theta: HomogenizedForcing
    projector: SineProjector

    def __post_init__(self) -> None:
        object.__setattr__(self, "_cache", {})
        object.__setattr__(self, "_lock", threading.Lock())

    def at(self, t: float) -> np.ndarray:
        key = float(t)
        with self._lock:
            cached = self._cache.get(key)
        if cached is not None:
            return cached
        projected = self.projector.project_values(self.theta(self.projector.points, key))
        with self._lock:
            return self._cache.setdefault(key, projected)

    def prefetch(self, times: np.ndarray) -> None:
        for t in times:
            self.at(t)


@dataclass(frozen=True, eq=False)
class ModeForcing:
    """θ_n(t) read from a shared ForcingTable."""

    table: ForcingTable
    index: int

    def __call__(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        values = np.array([self.table.at(tj)[self.index] for tj in t.ravel()], dtype=complex)
        return values.reshape(t.shape)


def _mode_coefficients(problem: PdeProblem, mode: SineMode):
    lower, reaction = [], []
    for term in problem.terms:
        if term.side == "lhs":
            beta = ScaledTime(-1.0, term.coefficient)
        else:
            beta = ScaledTime(term.symbol.eigenvalue(mode), term.coefficient)
        if term.order is None:
            reaction.append((1.0, beta))
        else:
            lower.append((term.order, beta))
    return tuple(lower), (SumTime(tuple(reaction)) if reaction else None)


def mode_problem(
    problem: PdeProblem,
    homogenized: Homogenized,
    mode: SineMode,
    quadrature_order: Optional[int] = None,
    *,
    table: Optional[ForcingTable] = None,
    mode_index: int = 0,
    initial_values: Optional[Sequence[complex]] = None,
) -> VotfOdeProblem:
    """Mode ODE with θ_n and initial values projected from Θ and v_i."""
    if table is None or initial_values is None:
        order = quadrature_order or _default_order(problem.domain, max(mode.index))
        projector = SineProjector(problem.domain, [mode], order)
        table = ForcingTable(homogenized.theta, projector)
        mode_index = 0
        initial_values = [projector.project(v)[0] for v in homogenized.initial]
    lower, reaction = _mode_coefficients(problem, mode)
    return VotfOdeProblem(
        leading_order=problem.leading_order,
        lower_terms=lower,
        forcing=ModeForcing(table, mode_index),
        initial_values=tuple(initial_values),
        T=problem.T,
        reaction=reaction,
    )


def _default_order(domain: BoxDomain, N_per_dim: int, base: Optional[int] = None) -> int:
    if base is None:
        base = config.QUAD_ORDER_1D if domain.d == 1 else config.QUAD_ORDER_2D
    return resolved_order(base, N_per_dim)


def _solve_one(args) -> VotfOdeSolution:
    index, problem, basis, collocation_count = args
    try:
        return solve_votfode(problem, basis, collocation_count)
    except FracspecError as exc:
        raise with_context(exc, f"mode {index}") from exc


def solve_modes(
    mode_problems: Sequence[VotfOdeProblem],
    basis: MuntzBasis,
    workers: Optional[int] = None,
    collocation_count: Optional[int] = None,
) -> tuple[VotfOdeSolution, ...]:
    """Solve independent mode ODEs; results keep the input order."""
    jobs = [(i, problem, basis, collocation_count) for i, problem in enumerate(mode_problems)]
    workers = workers or config.worker_count()
    if workers <= 1 or len(jobs) <= 1:
        return tuple(_solve_one(job) for job in jobs)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return tuple(executor.map(_solve_one, jobs))


def solve_pde(
    problem: PdeProblem,
    N_per_dim: int,
    basis: MuntzBasis,
    quadrature_order: Optional[int] = None,
    *,
    c_mq: float = DEFAULT_C_MQ,
    n_centers: Optional[int] = None,
    workers: Optional[int] = None,
    collocation_count: Optional[int] = None,
    lift_degree: Optional[int] = None,
) -> PdeSolution:
    problem = normalize(problem)
    if basis.alpha0 != problem.m:
        raise ProblemValidationError(f"basis offset {basis.alpha0} must equal the leading ceiling {problem.m}")
    if abs(basis.T - problem.T) > 1e-12 * problem.T:
        raise ProblemValidationError("basis horizon differs from the problem horizon")

    lift = build_lift(problem, N_per_dim, c_mq, n_centers, lift_degree)
    homogenized = homogenize(problem, lift)
    modes = enumerate_modes(problem.domain, N_per_dim)
    order = _default_order(problem.domain, N_per_dim, quadrature_order)
    projector = SineProjector(problem.domain, modes, order)
    logger.info(
        "Solving %d modes (N=%d, K=%d, δ=%g, quad=%d, lift=%s)",
        len(modes), N_per_dim, basis.K, basis.delta, order, lift.metadata.kind,
    )

    table = ForcingTable(homogenized.theta, projector)
    N_c = collocation_count if collocation_count is not None else 2 * basis.K
    try:
        table.prefetch(gc_points(N_c, problem.T).points)
        initial = np.array([projector.project(v) for v in homogenized.initial])  # (m, M)
    except FracspecError as exc:
        raise with_context(exc, "projection") from exc

    mode_problems = [
        mode_problem(problem, homogenized, mode, order, table=table, mode_index=i, initial_values=initial[:, i])
        for i, mode in enumerate(modes)
    ]
    solutions = solve_modes(mode_problems, basis, workers, collocation_count)

    exponents = np.concatenate([np.arange(problem.m, dtype=float), basis.exponents])
    coefficients = np.zeros((len(modes), exponents.size), dtype=complex)
    for i, sol in enumerate(solutions):
        coefficients[i, : problem.m] = [h for h in _homogeneous_coefficients(sol, problem.m)]
        coefficients[i, problem.m :] = sol.coefficients

    ill = sum(sol.ill_conditioned for sol in solutions)
    if ill:
        logger.warning("%d of %d mode systems were rank deficient", ill, len(solutions))
    diagnostics = {
        "N_per_dim": N_per_dim,
        "K": basis.K,
        "delta": basis.delta,
        "quadrature_order": order,
        "max_residual": float(max(sol.residual_norm for sol in solutions)),
        "ill_conditioned_modes": int(ill),
        "lift": lift.metadata.kind,
        "lift_fit_residual": lift.metadata.fit_residual,
    }
    return PdeSolution(
        lift=lift,
        modes=tuple(modes),
        solutions=solutions,
        domain=problem.domain,
        T=problem.T,
        basis=basis,
        N_per_dim=N_per_dim,
        exponents=exponents,
        mode_coefficients=coefficients,
        diagnostics=diagnostics,
    )


def solve(problem: PdeProblem, options: SolveOptions) -> PdeSolution:
    basis = MuntzBasis.for_order(problem.leading_order, options.K, options.delta, problem.T)
    return solve_pde(
        problem,
        options.N_per_dim,
        basis,
        options.quadrature_order,
        c_mq=options.c_mq,
        n_centers=options.n_centers,
        workers=options.workers,
        collocation_count=options.collocation_count,
        lift_degree=options.lift_degree,
    )


def _homogeneous_coefficients(sol: VotfOdeSolution, m: int) -> list[complex]:
    coefficients = [0j] * m
    for term in sol.homogeneous_poly.terms:
        coefficients[int(round(term.exponent))] = term.coefficient
    return coefficients


# --- Evaluation ---


def _check_points(sol: PdeSolution, x) -> np.ndarray:
    points = as_points(x, sol.domain.d)
    if not np.all(sol.domain.contains(points)):
        raise DomainError("evaluation point outside the closed box")
    return points


def _time_weights(sol: PdeSolution, times: np.ndarray) -> np.ndarray:
    require_time_in_range(float(times.min()), float(times.max()), sol.T)
    return sol.mode_coefficients @ np.power.outer(times, sol.exponents).T  # (M, n_t)


def eval_pde_grid(sol: PdeSolution, x, times, axis: Optional[int] = None) -> np.ndarray:
    """u (or ∂u/∂x_axis) on a (times × points) grid."""
    points = _check_points(sol, x)
    times = np.atleast_1d(np.asarray(times, dtype=float))
    table = sine_table(sol.modes, points) if axis is None else sine_gradient_table(sol.modes, points, axis)
    modal = np.moveaxis(table @ _time_weights(sol, times), -1, 0)
    return modal + sol.lift.values(points, times, axis=axis)


def eval_pde(sol: PdeSolution, x, t: float) -> np.ndarray:
    return eval_pde_grid(sol, x, [t])[0]


def eval_pde_gradient(sol: PdeSolution, x, t: float, axis: int) -> np.ndarray:
    if not 0 <= axis < sol.domain.d:
        raise DomainError(f"axis must lie in 0..{sol.domain.d - 1}")
    return eval_pde_grid(sol, x, [t], axis=axis)[0]

