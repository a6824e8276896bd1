"""Benchmark registry: the eight reproduction problems and their table layouts."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

import config
from fracspec.errors import DomainError
from fracspec.models import (
    BILAPLACIAN,
    IDENTITY,
    LAPLACIAN,
    BoundaryData,
    BoxDomain,
    ConstantTime,
    CosineTime,
    ExpSum,
    ExpTime,
    Gaussian,
    MuntzBasis,
    OrderFunction,
    PdeProblem,
    PdeTerm,
    Polynomial,
    PolynomialTime,
    PowerProfile,
    SechSum,
    SeparableField,
    SineProduct,
    SineTime,
    VotfOdeProblem,
)
from fracspec.services import metrics
from fracspec.services.muntz_bsm import manufactured_forcing, solve_votfode
from fracspec.services.oracle_fdm import FdmGrid, richardson_error
from fracspec.services.pipeline import (
    SolveOptions,
    boundary_from_exact,
    eval_pde_grid,
    initial_from_exact,
    manufactured_pde_forcing,
    solve,
    translate_field,
)

logger = logging.getLogger("fracspec.bench")

OVERRIDE_KEYS = ("N", "K", "delta", "T", "quad", "test_points", "test_times")


@dataclass(frozen=True)
class Table:
    name: str
    header: tuple[str, ...]
    rows: tuple[tuple, ...]


@dataclass(frozen=True)
class PlotData:
    """Point data plus a gnuplot script body that reads it."""

    name: str
    header: tuple[str, ...]
    rows: tuple[tuple, ...]
    script: str


@dataclass(frozen=True)
class BenchmarkResult:
    example: int
    tables: tuple[Table, ...]
    plots: tuple[PlotData, ...] = ()


@dataclass(frozen=True)
class Benchmark:
    id: int
    title: str
    defaults: dict
    accepts: tuple[str, ...]
    runner: Callable[[dict], BenchmarkResult] = field(repr=False)

    def run(self, overrides: Optional[dict] = None) -> BenchmarkResult:
        overrides = {key: value for key, value in (overrides or {}).items() if value is not None}
        unknown = sorted(set(overrides) - set(self.accepts))
        if unknown:
            raise DomainError(
                f"example {self.id} does not accept {', '.join(unknown)}; valid overrides: {', '.join(self.accepts)}"
            )
        params = {
            "test_points": config.TEST_POINTS,
            "test_times": config.TEST_TIMES,
            "quad": None,
            **self.defaults,
        }
        params["overridden"] = set(overrides)
        params.update(overrides)
        logger.info("Running example %d (%s) with %s", self.id, self.title, overrides or "defaults")
        return self.runner(params)


def _sweep(params: dict, key: str, default: list) -> list:
    return [params[key]] if key in params["overridden"] else list(default)


def _options(params: dict, N_per_dim: int, K: int, delta: Optional[float] = None, **extra) -> SolveOptions:
    return SolveOptions(
        N_per_dim=N_per_dim,
        K=K,
        delta=params.get("delta", config.DEFAULT_DELTA) if delta is None else delta,
        quadrature_order=params["quad"],
        **extra,
    )


def _co_column(errors: list[float]) -> list[Optional[float]]:
    return [None] + [metrics.co(errors[i - 1], errors[i]) for i in range(1, len(errors))]


# --- Problem definitions ---


def example1_problem(T: float) -> tuple[VotfOdeProblem, PowerProfile]:
    """Four-term ODE with reaction; exact w = t⁶ + t⁴ + t² + 1.

    Some of these orders leave their bands on [0, 100]; they are saturated.
    """
    leading = OrderFunction.from_callable(SineTime(3.2, 0.5), 4, T, saturate=True, label="3.2+0.5sin(t)")
    lower = (
        (OrderFunction.from_callable(SineTime(0.1, 0.5), 1, T, saturate=True, label="0.1+0.5sin(t)"), SineTime(0.0, -1.0)),
        (OrderFunction.from_callable(CosineTime(1.0, 1.0), 2, T, saturate=True, label="1+cos(t)"), CosineTime(0.0, -1.0)),
        (OrderFunction.from_callable(ExpTime(2.0, 0.1), 3, T, saturate=True, label="2+0.1e^t"), ExpTime(0.0, -1.0, -1.0)),
    )
    reaction = PolynomialTime((1.0, 0.0, 1.0))
    exact = PowerProfile.from_pairs([(1, 0), (1, 2), (1, 4), (1, 6)])
    forcing = manufactured_forcing(leading, lower, reaction, exact)
    return VotfOdeProblem(leading, lower, forcing, (1, 0, 2, 0), T, reaction), exact


def _manufactured_problem(
    name: str,
    domain: BoxDomain,
    T: float,
    leading: OrderFunction,
    terms: tuple[PdeTerm, ...],
    exact: SeparableField,
    *,
    homogeneous: bool = False,
    with_laplacian: bool = False,
    leading_coefficient: complex = 1.0,
    scalar_field: str = "real",
) -> PdeProblem:
    return PdeProblem(
        domain=domain,
        T=T,
        leading_order=leading,
        terms=terms,
        forcing=manufactured_pde_forcing(leading, terms, exact, leading_coefficient),
        initial=initial_from_exact(exact, leading.ceiling),
        boundary=BoundaryData() if homogeneous else boundary_from_exact(exact, with_laplacian),
        leading_coefficient=leading_coefficient,
        scalar_field=scalar_field,
        exact=exact,
        name=name,
    )


def example2_problem(T: float) -> PdeProblem:
    """Single-harmonic diffusion on [0, 10] with α(t) = 0.8 + 0.2t/T."""
    L = 10.0
    leading = OrderFunction.from_callable(PolynomialTime((0.8, 0.2 / T)), 1, T, label="0.8+0.2t/T")
    exact = SeparableField(((SineProduct(1.0, [math.pi / L], [0.0]), PowerProfile.monomial(1, 2)),))
    terms = (PdeTerm(None, ConstantTime(0.01), LAPLACIAN, "rhs"),)
    return _manufactured_problem("example2", BoxDomain((L,)), T, leading, terms, exact, homogeneous=True)


def example3_problem(T: float = 1.0) -> PdeProblem:
    """Diffusion with u = 10x²(1−x)(t+1)², α(t) = (2 + sin t)/4."""
    leading = OrderFunction.from_callable(SineTime(0.5, 0.25), 1, T, label="(2+sin(t))/4")
    exact = SeparableField(
        ((Polynomial(np.array([0.0, 0.0, 10.0, -10.0])), PowerProfile.from_pairs([(1, 0), (2, 1), (1, 2)])),)
    )
    terms = (PdeTerm(None, ConstantTime(1.0), LAPLACIAN, "rhs"),)
    return _manufactured_problem("example3", BoxDomain((1.0,)), T, leading, terms, exact, homogeneous=True)


def example4_problem(T: float = 1.0) -> PdeProblem:
    """Four-term equation on [−1, 1], shifted to [0, 2]; u = [sech(x−0.1) + sech(x+0.1)] t²."""
    leading = OrderFunction.from_callable(PolynomialTime((1.25, 0.0, 0.05)), 2, T, label="1.25+t²/20")
    lower = (
        OrderFunction.from_callable(CosineTime(1.2, 0.05), 2, T, label="1.2+cos(t)/20"),
        OrderFunction.from_callable(PolynomialTime((1.15, 0.05)), 2, T, label="1.15+t/20"),
        OrderFunction.from_callable(SineTime(1.1, 0.05), 2, T, label="1.1+sin(t)/20"),
    )
    terms = tuple(PdeTerm(order, ConstantTime(1.0), IDENTITY, "lhs") for order in lower)
    terms += (PdeTerm(None, ConstantTime(1.0), LAPLACIAN, "rhs"),)
    on_original = SeparableField(((SechSum([1.0, 1.0], [0.1, -0.1]), PowerProfile.monomial(1, 2)),))
    exact = translate_field(on_original, [-1.0])
    return _manufactured_problem("example4", BoxDomain((2.0,)), T, leading, terms, exact)


def example5_order(kind: str, T: float = 1.0) -> OrderFunction:
    """Orders of the complex example: a constant value, "4^(t-1)" or "e^t/3"."""
    if kind == "4^(t-1)":
        return OrderFunction.from_callable(ExpTime(0.0, 0.25, math.log(4.0)), 1, T, label=kind)
    if kind == "e^t/3":
        return OrderFunction.from_callable(ExpTime(0.0, 1.0 / 3.0, 1.0), 1, T, label=kind)
    return OrderFunction.constant(float(kind), T)


def example5_problem(order: OrderFunction, T: float = 1.0) -> PdeProblem:
    """i D^α u + u_xx = f on [0, 2π]; u = t²(cos x + i sin x)."""
    cos = SineProduct(1.0, [1.0], [math.pi / 2])
    sin = SineProduct(1.0, [1.0], [0.0])
    exact = SeparableField(((cos, PowerProfile.monomial(1, 2)), (sin, PowerProfile.monomial(1j, 2))))
    terms = (PdeTerm(None, ConstantTime(-1.0), LAPLACIAN, "rhs"),)
    return _manufactured_problem(
        "example5", BoxDomain((2 * math.pi,)), T, order, terms, exact, leading_coefficient=1j, scalar_field="complex"
    )


EXAMPLE6_PAIRS = {
    "1.6+sin(t)/5": (SineTime(1.6, 0.2), 2),
    "0.6+cos(t)/5": (CosineTime(0.6, 0.2), 1),
}


def example6_problem(pair: str, T: float = 1.0) -> PdeProblem:
    """Two-term equation with u = t² exp(−100(x−0.2)²)."""
    leading = OrderFunction.from_callable(PolynomialTime((1.9, 0.05)), 2, T, label="1.9+t/20")
    fn, ceiling = EXAMPLE6_PAIRS[pair]
    lower = OrderFunction.from_callable(fn, ceiling, T, label=pair)
    terms = (
        PdeTerm(lower, ConstantTime(1.0), IDENTITY, "lhs"),
        PdeTerm(None, ConstantTime(1.0), LAPLACIAN, "rhs"),
    )
    exact = SeparableField(((Gaussian(1.0, 100.0, [0.2]), PowerProfile.monomial(1, 2)),))
    return _manufactured_problem("example6", BoxDomain((1.0,)), T, leading, terms, exact)


def example7_problem(T: float = 1.0) -> PdeProblem:
    """Damped wave-diffusion on [0, 1]²; u = t³ e^{x1+x2}."""
    leading = OrderFunction.from_callable(SineTime(1.85, 0.05), 2, T, label="1.85+sin(t)/20")
    terms = (
        PdeTerm(OrderFunction.constant(1.0, T), ConstantTime(1.0), IDENTITY, "lhs"),
        PdeTerm(None, ConstantTime(1.0), LAPLACIAN, "rhs"),
    )
    exact = SeparableField(((ExpSum([1.0], [[1.0, 1.0]]), PowerProfile.monomial(1, 3)),))
    return _manufactured_problem("example7", BoxDomain((1.0, 1.0)), T, leading, terms, exact)


EXAMPLE8_POWER = 1.5


def example8_problem(T: float = 1.0) -> PdeProblem:
    """D^α u + Δ²u = f on [0, 1]² with u and Δu given on Γ; u = e^{x1+x2}(t^{4.5} + t)."""
    leading = OrderFunction.from_callable(PolynomialTime((1.4, 0.1)), 2, T, label="1.4+t/10")
    terms = (PdeTerm(None, ConstantTime(-1.0), BILAPLACIAN, "rhs"),)
    profile = PowerProfile.from_pairs([(1, EXAMPLE8_POWER + 3), (1, 1)])
    exact = SeparableField(((ExpSum([1.0], [[1.0, 1.0]]), profile),))
    return _manufactured_problem(
        "example8", BoxDomain((1.0, 1.0)), T, leading, terms, exact, with_laplacian=True
    )


# --- Runners ---


def _run_example1(params: dict) -> BenchmarkResult:
    tables = []
    deltas = _sweep(params, "delta", [0.1, 0.25, 0.5])
    Ks = _sweep(params, "K", range(3, 10))
    for T in _sweep(params, "T", [0.01, 1.0, 100.0]):
        problem, exact = example1_problem(T)
        header = ("K",) + tuple(f"{name}(delta={d:g})" for d in deltas for name in ("Rerr", "AO"))
        rows = []
        for K in Ks:
            row: list = [K]
            for delta in deltas:
                sol = solve_votfode(problem, MuntzBasis.for_order(problem.leading_order, K, delta, T))
                value = metrics.relative_error(exact, sol, T, 1, params["test_times"])
                row += [value, metrics.ao(value, K) if K >= 2 else None]
            rows.append(tuple(row))
        tables.append(Table(f"example1_T{T:g}", header, tuple(rows)))
    return BenchmarkResult(1, tuple(tables))


# Comparison columns carried next to our results: Crank–Nicolson FDM (h = 0.1, τ = 0.01) by T
EXAMPLE2_CN_FDM = {0.1: 4.18e-4, 0.2: 6.98e-4, 0.3: 5.68e-4, 0.4: 2.33e-4, 0.5: 2.03e-3}
# Finite-difference reference (h = 0.005) by K row: (τ, Merr)
EXAMPLE3_REFERENCE = {
    4: (0.01, 2.09e-4), 5: (0.005, 8.54e-5), 6: (0.0025, 3.49e-5), 7: (0.00125, 1.44e-5), 8: (0.000625, 5.98e-6),
}


def _run_example2(params: dict) -> BenchmarkResult:
    Ks = _sweep(params, "K", [3, 4, 5])
    rows = []
    for T in _sweep(params, "T", [0.1, 0.2, 0.3, 0.4, 0.5]):
        problem = example2_problem(T)
        row: list = [T]
        for K in Ks:
            sol = solve(problem, _options(params, params["N"], K))
            row.append(metrics.merr(problem.exact, sol, T, params["test_points"]))
        row.append(EXAMPLE2_CN_FDM.get(round(T, 6)))
        rows.append(tuple(row))
    header = ("T",) + tuple(f"Merr(K={K})" for K in Ks) + ("Merr(CN FDM h=0.1 tau=0.01)",)
    return BenchmarkResult(2, (Table("example2", header, tuple(rows)),))


def _run_example3(params: dict) -> BenchmarkResult:
    Ns = _sweep(params, "N", [100, 200, 250])
    problem = example3_problem(params["T"])
    rows = []
    for K in _sweep(params, "K", range(4, 9)):
        row: list = [K]
        for N in Ns:
            sol = solve(problem, _options(params, N, K))
            row.append(metrics.merr(problem.exact, sol, problem.T, params["test_points"]))
        row.extend(EXAMPLE3_REFERENCE.get(K, (None, None)))
        rows.append(tuple(row))
    header = ("K",) + tuple(f"Merr(N={N})" for N in Ns) + ("tau(reference h=0.005)", "Merr(reference h=0.005)")
    return BenchmarkResult(3, (Table("example3", header, tuple(rows)),))


def _run_example4(params: dict) -> BenchmarkResult:
    Ns = _sweep(params, "N", [10, 20, 40, 80, 160, 320])
    deltas = _sweep(params, "delta", [0.1, 0.25, 0.5])
    problem = example4_problem(params["T"])
    columns = []
    for delta in deltas:
        errors = [
            metrics.relative_error(problem.exact, solve(problem, _options(params, N, params["K"], delta)), problem.T,
                         params["test_points"], params["test_times"])
            for N in Ns
        ]
        columns.append((errors, _co_column(errors)))
    rows = tuple(
        (N,) + tuple(value for errors, cos in columns for value in (errors[i], cos[i])) for i, N in enumerate(Ns)
    )
    header = ("N",) + tuple(f"{name}(delta={d:g})" for d in deltas for name in ("Rerr", "CO"))
    return BenchmarkResult(4, (Table("example4", header, rows),))


EXAMPLE5_CELLS = [(5, 5), (20, 5), (45, 5), (80, 5)]
# Local discontinuous Galerkin reference per order, aligned with EXAMPLE5_CELLS: (N, K, Merr Re, Merr Im)
EXAMPLE5_REFERENCE = {
    "0.1": [(5, 5, 3.18e-2, 3.12e-2), (10, 10, 4.11e-3, 3.89e-3), (15, 15, 1.22e-3, 1.22e-3), (20, 20, 5.19e-4, 5.16e-4)],
    "0.3": [(5, 5, 3.19e-2, 3.11e-2), (10, 10, 4.07e-3, 3.85e-3), (15, 15, 1.18e-3, 1.18e-3), (20, 20, 4.83e-4, 4.84e-4)],
    "0.5": [(5, 5, 3.20e-2, 3.12e-2), (10, 10, 4.12e-3, 3.90e-3), (15, 15, 1.23e-3, 1.22e-3), (20, 20, 5.24e-4, 5.20e-4)],
}
EXAMPLE5_REFERENCE_HEADER = ("reference N", "reference K", "reference Merr(Re u)", "reference Merr(Im u)")
EXAMPLE5_FIGURE_NS = [5, 10, 20, 40, 80]


def _run_example5(params: dict) -> BenchmarkResult:
    T = params["T"]
    if "N" in params["overridden"] or "K" in params["overridden"]:
        cells = [(params.get("N", 80), params.get("K", 5))]
    else:
        cells = EXAMPLE5_CELLS
    rows = []
    for alpha in ("0.1", "0.3", "0.5"):
        problem = example5_problem(example5_order(alpha, T), T)
        for i, (N, K) in enumerate(cells):
            sol = solve(problem, _options(params, N, K))
            reference = EXAMPLE5_REFERENCE[alpha][i] if cells is EXAMPLE5_CELLS else (None,) * 4
            rows.append((
                float(alpha), N, K,
                metrics.merr(problem.exact, sol, T, params["test_points"], part="real"),
                metrics.merr(problem.exact, sol, T, params["test_points"], part="imag"),
                *reference,
            ))
    header = ("alpha", "N", "K", "Merr(Re u)", "Merr(Im u)") + EXAMPLE5_REFERENCE_HEADER
    table = Table("example5", header, tuple(rows))

    figure_rows = []
    figure_ns = [params["N"]] if "N" in params["overridden"] else EXAMPLE5_FIGURE_NS
    K = params.get("K", 5)
    for kind in ("4^(t-1)", "e^t/3"):
        problem = example5_problem(example5_order(kind, T), T)
        for N in figure_ns:
            sol = solve(problem, _options(params, N, K))
            figure_rows.append((
                kind, N,
                metrics.merr(problem.exact, sol, T, params["test_points"], part="real"),
                metrics.merr(problem.exact, sol, T, params["test_points"], part="imag"),
                metrics.relative_error(problem.exact, sol, T, params["test_points"], params["test_times"]),
            ))
    script = "\n".join([
        "set logscale y",
        "set xlabel 'N'",
        "set ylabel 'error'",
        "set datafile separator ','",
        "plot 'example5_fig.csv' using 2:($1 eq '4^(t-1)' ? $3 : 1/0) with linespoints title 'Merr Re, 4^{t-1}', \\",
        "     'example5_fig.csv' using 2:($1 eq 'e^t/3' ? $3 : 1/0) with linespoints title 'Merr Re, e^t/3', \\",
        "     'example5_fig.csv' using 2:($1 eq '4^(t-1)' ? $5 : 1/0) with linespoints title 'Rerr, 4^{t-1}', \\",
        "     'example5_fig.csv' using 2:($1 eq 'e^t/3' ? $5 : 1/0) with linespoints title 'Rerr, e^t/3'",
    ])
    plot = PlotData("example5_fig", ("order", "N", "Merr(Re u)", "Merr(Im u)", "Rerr"), tuple(figure_rows), script)
    return BenchmarkResult(5, (table,), (plot,))


def _run_example6(params: dict) -> BenchmarkResult:
    Ns = _sweep(params, "N", [16, 32, 64, 128, 256])
    columns = []
    for pair in EXAMPLE6_PAIRS:
        problem = example6_problem(pair, params["T"])
        errors = [
            metrics.relative_error(problem.exact, solve(problem, _options(params, N, params["K"])), problem.T,
                         params["test_points"], params["test_times"])
            for N in Ns
        ]
        columns.append((errors, _co_column(errors)))
    rows = tuple(
        (N,) + tuple(value for errors, cos in columns for value in (errors[i], cos[i])) for i, N in enumerate(Ns)
    )
    header = ("N",) + tuple(f"{name}(alpha1={pair})" for pair in EXAMPLE6_PAIRS for name in ("Rerr", "CO"))
    return BenchmarkResult(6, (Table("example6", header, rows),))


def per_dim(N_total: int) -> int:
    """Modes per dimension for a total 2D mode count (a perfect square)."""
    root = math.isqrt(N_total)
    if root * root != N_total:
        raise DomainError(f"2D mode count N={N_total} must be a perfect square")
    return root


def _run_example7(params: dict) -> BenchmarkResult:
    Ns = _sweep(params, "N", [25, 100, 225])
    Ks = _sweep(params, "K", [4, 5])
    problem = example7_problem(params["T"])
    rows = []
    for N in Ns:
        row: list = [N]
        for K in Ks:
            sol = solve(problem, _options(params, per_dim(N), K, c_mq=4.0))
            row.append(metrics.relative_error(problem.exact, sol, problem.T, params["test_points"], params["test_times"]))
            row.append(
                metrics.relative_error(problem.exact, sol, problem.T, params["test_points"], params["test_times"], axis=0)
            )
        rows.append(tuple(row))
    header = ("N",) + tuple(f"{name}(K={K})" for K in Ks for name in ("Rerr(u)", "Rerr(du/dx1)"))
    return BenchmarkResult(7, (Table("example7", header, tuple(rows)),))


FIGURE_GRID = 41


def error_regions(points: np.ndarray, errors: np.ndarray, frame: float = 0.1) -> tuple[float, float]:
    """Max error over the central quarter [0.25, 0.75]² and over the frame within `frame` of Γ."""
    central = np.all((points >= 0.25) & (points <= 0.75), axis=-1)
    edge = np.any((points <= frame) | (points >= 1 - frame), axis=-1)
    return float(np.max(errors[central])), float(np.max(errors[edge]))


def _run_example8(params: dict) -> BenchmarkResult:
    N, K = params["N"], params["K"]
    problem = example8_problem(params["T"])
    T = problem.T
    sol = solve(problem, _options(params, per_dim(N), K, c_mq=8.0))

    points = metrics.sample_points(problem.domain, params["test_points"])
    errors = np.abs(problem.exact.values(points, [T])[0] - eval_pde_grid(sol, points, [T])[0])
    central, frame = error_regions(points, errors)
    rerr = metrics.relative_error(problem.exact, sol, T, params["test_points"], params["test_times"])
    table = Table(
        "example8",
        ("N", "K", "Merr", "Merr(central quarter)", "Merr(boundary frame)", "Rerr"),
        ((N, K, float(errors.max()), central, frame, rerr),),
    )

    axis = np.linspace(0.0, 1.0, FIGURE_GRID)
    grid = np.stack([g.ravel() for g in np.meshgrid(axis, axis, indexing="ij")], axis=-1)
    numeric = eval_pde_grid(sol, grid, [T])[0].real
    exact = problem.exact.values(grid, [T])[0].real
    rows = tuple(
        (float(x1), float(x2), float(u), float(e), float(abs(u - e)))
        for (x1, x2), u, e in zip(grid, numeric, exact)
    )
    script = "\n".join([
        "set datafile separator ','",
        f"set dgrid3d {FIGURE_GRID},{FIGURE_GRID}",
        "set hidden3d",
        "set multiplot layout 1,2",
        "set title 'numerical solution'",
        "splot 'example8_fig.csv' using 1:2:3 with lines notitle",
        "set title 'absolute error'",
        "splot 'example8_fig.csv' using 1:2:5 with lines notitle",
        "unset multiplot",
    ])
    plot = PlotData("example8_fig", ("x1", "x2", "u_num", "u_exact", "abs_err"), rows, script)
    return BenchmarkResult(8, (table,), (plot,))


REGISTRY: dict[int, Benchmark] = {
    1: Benchmark(1, "multi-term variable-order ODE", {"K": 9, "delta": 0.25, "T": 1.0},
                 ("K", "delta", "T", "test_times"), _run_example1),
    2: Benchmark(2, "single-harmonic diffusion", {"N": 10, "K": 5, "T": 0.5},
                 OVERRIDE_KEYS, _run_example2),
    3: Benchmark(3, "diffusion with polynomial initial data", {"N": 200, "K": 5, "T": 1.0},
                 OVERRIDE_KEYS, _run_example3),
    4: Benchmark(4, "multi-term equation on a shifted interval", {"N": 320, "K": 4, "T": 1.0},
                 OVERRIDE_KEYS, _run_example4),
    5: Benchmark(5, "complex Schrodinger-type equation", {"N": 80, "K": 5, "T": 1.0},
                 OVERRIDE_KEYS, _run_example5),
    6: Benchmark(6, "two-term equation with a narrow Gaussian", {"N": 256, "K": 5, "T": 1.0},
                 OVERRIDE_KEYS, _run_example6),
    7: Benchmark(7, "2D damped wave-diffusion, MQ lift", {"N": 25, "K": 4, "T": 1.0},
                 OVERRIDE_KEYS, _run_example7),
    8: Benchmark(8, "2D fourth-order equation, MQ lift", {"N": 36, "K": 5, "T": 1.0},
                 OVERRIDE_KEYS, _run_example8),
}


def get_benchmark(example_id: int) -> Benchmark:
    try:
        return REGISTRY[example_id]
    except KeyError:
        raise DomainError(f"unknown example {example_id}; valid ids: {', '.join(map(str, REGISTRY))}") from None


def run_example(example_id: int, overrides: Optional[dict] = None) -> BenchmarkResult:
    return get_benchmark(example_id).run(overrides)


# --- Finite-difference cross-check ---

ORACLE_GRIDS = {
    # example id -> (h, τ)
    2: (0.1, 0.01),
    3: (0.02, 0.01),
}


def run_oracle(example_id: int, overrides: Optional[dict] = None) -> BenchmarkResult:
    """Spectral solution against the L1 finite-difference oracle at shared nodes and T."""
    if example_id not in ORACLE_GRIDS:
        raise DomainError(f"the oracle covers examples {', '.join(map(str, ORACLE_GRIDS))}")
    bench = get_benchmark(example_id)
    overrides = {key: value for key, value in (overrides or {}).items() if value is not None}
    params = {**bench.defaults, "quad": None, **overrides, "overridden": set(overrides)}
    T = params["T"]
    problem = example2_problem(T) if example_id == 2 else example3_problem(T)
    L = problem.domain.lengths[0]
    h, tau = ORACLE_GRIDS[example_id]
    grid = FdmGrid.uniform(L, T, round(L / h), max(1, round(T / tau)))
    fdm, estimate = richardson_error(problem, grid)
    sol = solve(problem, _options(params, params["N"], params["K"]))
    nodes = np.linspace(0.0, L, grid.n_x + 1)
    spectral = eval_pde_grid(sol, nodes, [T])[0]
    exact = problem.exact.values(nodes[:, None], [T])[0]
    gap = float(np.max(np.abs(spectral - fdm[-1])))
    row = (
        T, grid.h, grid.tau,
        float(np.max(np.abs(fdm[-1] - exact))),
        float(np.max(np.abs(spectral - exact))),
        gap, estimate,
    )
    logger.info("Oracle example %d: |spectral - FDM| = %.3e, Richardson estimate %.3e", example_id, gap, estimate)
    header = ("T", "h", "tau", "Merr(FDM)", "Merr(spectral)", "max|spectral-FDM|", "Richardson estimate")
    return BenchmarkResult(example_id, (Table(f"oracle_example{example_id}", header, (row,)),))
