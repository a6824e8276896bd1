"""JSON problem files: pydantic schema, loading and the solve-and-report step.

A problem file mirrors PdeProblem. Time data of separable fields is given as
exponent/coefficient pairs, spatial functions come from the registered
expression set (polynomial, exp-sum, sech-sum, gaussian, sine). Wherever a
coefficient is expected, a number or an ``[re, im]`` pair is accepted.
"""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Annotated, Any, Literal, Optional, Union

import numpy as np
from pydantic import AfterValidator, BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

import config
from fracspec.errors import ArtifactIOError, ProblemValidationError
from fracspec.models import (
    BILAPLACIAN,
    IDENTITY,
    LAPLACIAN,
    BoundaryData,
    BoxDomain,
    CosineTime,
    ExpSum,
    ExpTime,
    Gaussian,
    OrderFunction,
    PdeProblem,
    PdeSolution,
    PdeTerm,
    Polynomial,
    PolynomialTime,
    PowerProfile,
    SechSum,
    SeparableField,
    SineProduct,
    SineTime,
    SpatialFunction,
    Translated,
)
from fracspec.services import metrics
from fracspec.services.pipeline import (
    DEFAULT_C_MQ,
    SolveOptions,
    boundary_from_exact,
    eval_pde_grid,
    initial_from_exact,
    manufactured_pde_forcing,
    solve,
    translate_field,
)

logger = logging.getLogger("fracspec.pipeline")

_SYMBOLS = {"identity": IDENTITY, "laplacian": LAPLACIAN, "bilaplacian": BILAPLACIAN}


def _check_pair(value: Any) -> Any:
    if isinstance(value, list) and len(value) != 2:
        raise ValueError("complex coefficients are written as [re, im]")
    return value


Coefficient = Annotated[Union[float, list[float]], AfterValidator(_check_pair)]


def _complex(value: Coefficient) -> complex:
    if isinstance(value, list):
        return complex(value[0], value[1])
    return complex(value)


class _Schema(BaseModel):
    model_config = ConfigDict(extra="forbid")


# --- Time functions ---


class PolynomialTimeSpec(_Schema):
    kind: Literal["polynomial"]
    coefficients: list[Coefficient]

    def build(self):
        return PolynomialTime(tuple(_complex(c) for c in self.coefficients))


class SineTimeSpec(_Schema):
    kind: Literal["sin", "cos"]
    a: float = 0.0
    b: float = 1.0
    c: float = 1.0

    def build(self):
        cls = SineTime if self.kind == "sin" else CosineTime
        return cls(self.a, self.b, self.c)


class ExpTimeSpec(_Schema):
    kind: Literal["exp"]
    a: float = 0.0
    b: float = 1.0
    c: float = 1.0

    def build(self):
        return ExpTime(self.a, self.b, self.c)


TimeSpec = Annotated[Union[PolynomialTimeSpec, SineTimeSpec, ExpTimeSpec], Field(discriminator="kind")]


def _time_before(v: Any) -> Any:
    """A bare number or [re, im] pair is a constant time function."""
    if isinstance(v, (int, float)) or (isinstance(v, list) and len(v) == 2):
        return {"kind": "polynomial", "coefficients": [v]}
    return v


class OrderSpec(_Schema):
    """Either ``{"value": 0.5}`` or a time function with its ceiling."""

    value: Optional[float] = None
    fn: Optional[TimeSpec] = None
    ceiling: Optional[int] = None
    saturate: bool = False

    @model_validator(mode="before")
    @classmethod
    def accept_number(cls, data):
        if isinstance(data, (int, float)):
            return {"value": data}
        return data

    @model_validator(mode="after")
    def one_form(self):
        if (self.value is None) == (self.fn is None):
            raise ValueError("an order is either a constant 'value' or a time function 'fn'")
        if self.fn is not None and self.ceiling is None:
            raise ValueError("a variable order needs its integer 'ceiling'")
        return self

    def build(self, T: float) -> OrderFunction:
        if self.value is not None:
            order = OrderFunction.constant(self.value, T)
            if self.ceiling is not None and self.ceiling != order.ceiling:
                raise ProblemValidationError(f"order {self.value:g} does not have ceiling {self.ceiling}")
            return order
        return OrderFunction.from_callable(self.fn.build(), self.ceiling, T, saturate=self.saturate)


# --- Spatial functions ---


class PolynomialSpec(_Schema):
    kind: Literal["polynomial"]
    coefficients: Union[list[float], list[list[float]]]

    def build(self, d: int) -> SpatialFunction:
        c = np.asarray(self.coefficients, dtype=float)
        if c.ndim != d:
            raise ProblemValidationError(f"polynomial coefficients must be a {d}D array on a {d}D domain")
        return Polynomial(c)


class ExpSumSpec(_Schema):
    kind: Literal["exp-sum"]
    weights: list[Coefficient]
    wave_vectors: list[list[float]]

    def build(self, d: int) -> SpatialFunction:
        if any(len(k) != d for k in self.wave_vectors):
            raise ProblemValidationError(f"exp-sum wave vectors must have {d} components")
        return ExpSum(np.array([_complex(w) for w in self.weights]), np.asarray(self.wave_vectors))


class SechSumSpec(_Schema):
    kind: Literal["sech-sum"]
    weights: list[Coefficient]
    shifts: list[float]

    def build(self, d: int) -> SpatialFunction:
        if d != 1:
            raise ProblemValidationError("sech-sum is one-dimensional")
        return SechSum(np.array([_complex(w) for w in self.weights]), np.asarray(self.shifts))


class GaussianSpec(_Schema):
    kind: Literal["gaussian"]
    weight: Coefficient = 1.0
    width: float
    center: list[float]

    def build(self, d: int) -> SpatialFunction:
        if len(self.center) != d:
            raise ProblemValidationError(f"gaussian center must have {d} components")
        return Gaussian(_complex(self.weight), self.width, np.asarray(self.center))


class SineSpec(_Schema):
    kind: Literal["sine"]
    amplitude: Coefficient = 1.0
    wave_numbers: list[float]
    phases: Optional[list[float]] = None

    def build(self, d: int) -> SpatialFunction:
        phases = self.phases if self.phases is not None else [0.0] * len(self.wave_numbers)
        if len(self.wave_numbers) != d or len(phases) != d:
            raise ProblemValidationError(f"sine needs {d} wave numbers and phases")
        return SineProduct(_complex(self.amplitude), np.asarray(self.wave_numbers), np.asarray(phases))


SpatialSpec = Annotated[
    Union[PolynomialSpec, ExpSumSpec, SechSumSpec, GaussianSpec, SineSpec], Field(discriminator="kind")
]


class PowerTermSpec(_Schema):
    coefficient: Coefficient
    exponent: float = Field(ge=0)


class FieldTermSpec(_Schema):
    spatial: SpatialSpec
    profile: list[PowerTermSpec]


def _build_field(terms: list[FieldTermSpec], d: int) -> SeparableField:
    return SeparableField(
        tuple(
            (
                term.spatial.build(d),
                PowerProfile.from_pairs((_complex(p.coefficient), p.exponent) for p in term.profile),
            )
            for term in terms
        )
    )


# --- Problem ---


class DomainSpec(_Schema):
    lengths: list[float] = Field(min_length=1, max_length=2)
    # Lower corner; functions are written in the original coordinates
    origin: Optional[list[float]] = None

    @model_validator(mode="after")
    def check_origin(self):
        if self.origin is not None and len(self.origin) != len(self.lengths):
            raise ValueError("origin and lengths must have the same dimension")
        return self


class TermSpec(_Schema):
    side: Literal["lhs", "rhs"]
    order: Optional[OrderSpec] = None
    coefficient: TimeSpec = Field(default_factory=lambda: PolynomialTimeSpec(kind="polynomial", coefficients=[1.0]))
    symbol: Optional[Literal["identity", "laplacian", "bilaplacian"]] = None

    @field_validator("coefficient", mode="before")
    @classmethod
    def coerce_constant(cls, v):
        return _time_before(v)

    def build(self, T: float) -> PdeTerm:
        symbol = self.symbol or ("identity" if self.side == "lhs" else "laplacian")
        order = self.order.build(T) if self.order is not None else None
        return PdeTerm(order, self.coefficient.build(), _SYMBOLS[symbol], self.side)


class BoundarySpec(_Schema):
    value: Optional[list[FieldTermSpec]] = None
    laplacian: Optional[list[FieldTermSpec]] = None
    neumann: Optional[list[FieldTermSpec]] = None


class OptionsSpec(_Schema):
    N: int = Field(default=16, ge=1, description="sine modes per dimension")
    K: int = Field(default=5, ge=1)
    delta: float = Field(default_factory=lambda: config.DEFAULT_DELTA, gt=0)
    quad: Optional[int] = Field(default=None, ge=2)
    c_mq: float = Field(default=DEFAULT_C_MQ, gt=0)
    n_centers: Optional[int] = Field(default=None, ge=1)
    collocation_count: Optional[int] = Field(default=None, ge=1)
    lift_degree: Optional[int] = Field(default=None, ge=0, description="Legendre correction degree of the 2D lift")

    def to_options(self) -> SolveOptions:
        return SolveOptions(
            N_per_dim=self.N,
            K=self.K,
            delta=self.delta,
            quadrature_order=self.quad,
            c_mq=self.c_mq,
            n_centers=self.n_centers,
            collocation_count=self.collocation_count,
            lift_degree=self.lift_degree,
        )


class ProblemSpec(_Schema):
    name: str = ""
    domain: DomainSpec
    T: float = Field(gt=0)
    leading_order: OrderSpec
    leading_coefficient: Coefficient = 1.0
    terms: list[TermSpec] = Field(default_factory=list)
    forcing: Optional[list[FieldTermSpec]] = None
    exact: Optional[list[FieldTermSpec]] = None
    boundary: Optional[BoundarySpec] = None
    initial: Optional[list[SpatialSpec]] = None
    scalar_field: Literal["real", "complex"] = "real"
    options: OptionsSpec = Field(default_factory=OptionsSpec)

    @model_validator(mode="after")
    def forcing_or_exact(self):
        if (self.forcing is None) == (self.exact is None):
            raise ValueError("give exactly one of 'forcing' and 'exact'")
        if self.exact is None and self.initial is None:
            raise ValueError("'initial' is required when no exact solution is given")
        return self

    def build(self) -> PdeProblem:
        """Assemble the PdeProblem; data missing from the file is derived from 'exact'."""
        d = len(self.domain.lengths)
        domain = BoxDomain(tuple(self.domain.lengths))
        leading = self.leading_order.build(self.T)
        terms = tuple(term.build(self.T) for term in self.terms)
        leading_coefficient = _complex(self.leading_coefficient)
        offset = self.domain.origin

        def field(spec: Optional[list[FieldTermSpec]]) -> Optional[SeparableField]:
            if spec is None:
                return None
            built = _build_field(spec, d)
            return translate_field(built, offset) if offset is not None else built

        exact = field(self.exact)
        if exact is not None:
            forcing = manufactured_pde_forcing(leading, terms, exact, leading_coefficient)
        else:
            forcing = field(self.forcing).value
        if self.boundary is not None:
            boundary = BoundaryData(
                value=field(self.boundary.value),
                laplacian=field(self.boundary.laplacian),
                neumann=field(self.boundary.neumann),
            )
        elif exact is not None:
            fourth_order = any(term.symbol.kind == "bilaplacian" for term in terms)
            boundary = boundary_from_exact(exact, with_laplacian=fourth_order)
        else:
            boundary = BoundaryData()
        if self.initial is not None:
            initial = tuple(spec.build(d) for spec in self.initial)
            if offset is not None:
                initial = tuple(Translated(fn, np.asarray(offset)) for fn in initial)
        else:
            initial = initial_from_exact(exact, leading.ceiling)
        scalar_field = "complex" if leading_coefficient.imag != 0 else self.scalar_field
        return PdeProblem(
            domain=domain,
            T=self.T,
            leading_order=leading,
            terms=terms,
            forcing=forcing,
            initial=initial,
            boundary=boundary,
            leading_coefficient=leading_coefficient,
            scalar_field=scalar_field,
            exact=exact,
            name=self.name,
        )


def parse_problem(data: Any) -> ProblemSpec:
    try:
        return ProblemSpec.model_validate(data)
    except ValidationError as exc:
        raise ProblemValidationError(f"invalid problem: {exc}") from exc


def load_problem(path: Path | str) -> ProblemSpec:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ArtifactIOError(f"cannot read problem file {path}: {exc}") from exc
    try:
        return ProblemSpec.model_validate_json(text)
    except ValidationError as exc:
        raise ProblemValidationError(f"invalid problem file {path}: {exc}") from exc


# --- Solve and report ---


class SolveReport(BaseModel):
    name: str
    N: int
    K: int
    delta: float
    diagnostics: dict
    merr: Optional[float] = None
    rerr: Optional[float] = None
    # u at T on a uniform interior grid: box coordinates from the lower corner, then Re u, Im u
    samples: list[list[float]]


def report(problem: PdeProblem, solution: PdeSolution, options: SolveOptions, per_dim: int = 11) -> SolveReport:
    points = metrics.sample_points(problem.domain, per_dim)
    values = eval_pde_grid(solution, points, [problem.T])[0]
    merr = rerr = None
    if problem.exact is not None:
        errors = metrics.error_report(
            problem.exact, solution, problem.T, config.TEST_POINTS, config.TEST_TIMES,
            parameters={"N": options.N_per_dim, "K": options.K, "delta": options.delta, "T": problem.T},
        )
        merr, rerr = errors.merr, errors.rerr
    return SolveReport(
        name=problem.name,
        N=options.N_per_dim,
        K=options.K,
        delta=options.delta,
        diagnostics=solution.diagnostics,
        merr=merr,
        rerr=rerr,
        samples=[[*map(float, x), float(u.real), float(u.imag)] for x, u in zip(points, values)],
    )


def solve_spec(spec: ProblemSpec, per_dim: int = 11) -> SolveReport:
    problem = spec.build()
    options = spec.options.to_options()
    logger.info("Solving problem %r on %s", spec.name or "<unnamed>", problem.domain.lengths)
    solution = solve(problem, options)
    return report(problem, solution, options, per_dim)
