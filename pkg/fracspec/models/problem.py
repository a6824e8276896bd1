"""PDE problem definition and its assembled spectral solution."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from fracspec.checks import require_positive
from fracspec.errors import ProblemValidationError
from fracspec.models.domain import BoxDomain, SineMode, SpatialSymbol
from fracspec.models.lift import LiftFunction
from fracspec.models.ode import MuntzBasis, VotfOdeSolution
from fracspec.models.order import OrderFunction
from fracspec.models.spatial import SeparableField
from fracspec.models.timefn import TimeFunction

# f(x, t): points shaped (..., d), scalar t
ForcingFunction = Callable[[np.ndarray, float], np.ndarray]
InitialFunction = Callable[[np.ndarray], np.ndarray]

SIDES = ("lhs", "rhs")


@dataclass(frozen=True, eq=False)
class PdeTerm:
    """a(t)·D^{order}(symbol u) on either side of the equation.

    ``order=None`` means no time derivative: a(t)·symbol u, e.g. the u_xx of a
    diffusion equation. Left-hand terms carry the identity symbol.
    """

    order: Optional[OrderFunction]
    coefficient: TimeFunction
    symbol: SpatialSymbol
    side: str

    def __post_init__(self) -> None:
        if self.side not in SIDES:
            raise ProblemValidationError(f"term side must be 'lhs' or 'rhs', got {self.side!r}")
        if self.side == "lhs" and self.symbol.kind != "identity":
            raise ProblemValidationError("left-hand time terms carry the identity symbol")
        if self.side == "rhs" and self.symbol.kind == "identity":
            raise ProblemValidationError("right-hand terms need a laplacian or bilaplacian symbol")


@dataclass(frozen=True, eq=False)
class BoundaryData:
    """Dirichlet value data and, for fourth-order problems, Δu data on Γ."""

    value: Optional[SeparableField] = None
    laplacian: Optional[SeparableField] = None
    neumann: Optional[SeparableField] = None

    @property
    def is_homogeneous(self) -> bool:
        return self.value is None and self.laplacian is None


@dataclass(frozen=True, eq=False)
class PdeProblem:
    domain: BoxDomain
    T: float
    leading_order: OrderFunction
    terms: tuple[PdeTerm, ...]
    forcing: ForcingFunction
    initial: tuple[InitialFunction, ...]
    boundary: BoundaryData = field(default_factory=BoundaryData)
    leading_coefficient: complex = 1.0
    scalar_field: str = "real"
    exact: Optional[SeparableField] = None
    name: str = ""

    def __post_init__(self) -> None:
        require_positive("T", self.T)
        object.__setattr__(self, "terms", tuple(self.terms))
        object.__setattr__(self, "initial", tuple(self.initial))
        m = self.leading_order.ceiling
        if len(self.initial) != m:
            raise ProblemValidationError(f"leading order has ceiling {m}, so {m} initial functions are needed")
        if self.boundary.neumann is not None:
            raise ProblemValidationError("Neumann data cannot be represented by the sine basis")
        if self.leading_coefficient == 0:
            raise ProblemValidationError("leading coefficient must be non-zero")
        if self.scalar_field not in ("real", "complex"):
            raise ProblemValidationError("scalar_field must be 'real' or 'complex'")
        orders = [self.leading_order] + [term.order for term in self.terms if term.order is not None]
        for order in orders:
            if order.domain_end < self.T * (1 - 1e-12):
                raise ProblemValidationError(f"order {order.label or ''} is not validated up to T={self.T:g}")
        for term in self.terms:
            if term.order is not None and term.order.ceiling > m:
                raise ProblemValidationError("a term order exceeds the ceiling of the leading order")

    @property
    def m(self) -> int:
        return self.leading_order.ceiling


@dataclass(frozen=True, eq=False)
class PdeSolution:
    """Lift plus sine modes with their time solutions.

    ``mode_coefficients[i, j]`` is the coefficient of t^exponents[j] in mode i.
    """

    lift: LiftFunction
    modes: tuple[SineMode, ...]
    solutions: tuple[VotfOdeSolution, ...]
    domain: BoxDomain
    T: float
    basis: MuntzBasis
    N_per_dim: int
    exponents: np.ndarray
    mode_coefficients: np.ndarray
    diagnostics: dict = field(default_factory=dict)
