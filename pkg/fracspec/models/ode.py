"""One mode's variable-order fractional ODE and its collocation solution."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from fracspec.checks import require_in_unit_interval, require_int_at_least, require_positive
from fracspec.errors import ProblemValidationError
from fracspec.models.order import OrderFunction
from fracspec.models.profile import PowerProfile, PowerTerm
from fracspec.models.timefn import TimeFunction


@dataclass(frozen=True)
class MuntzBasis:
    """Exponents δ_k = alpha0 + delta·(k−1), k = 1..K."""

    K: int
    delta: float
    alpha0: int
    T: float

    def __post_init__(self) -> None:
        require_int_at_least("K", self.K, 1)
        require_in_unit_interval("delta", self.delta)
        require_int_at_least("alpha0", self.alpha0, 1)
        require_positive("T", self.T)

    @classmethod
    def for_order(cls, order: OrderFunction, K: int, delta: float, T: float) -> MuntzBasis:
        return cls(K, delta, order.ceiling, T)

    @property
    def exponents(self) -> np.ndarray:
        return self.alpha0 + self.delta * np.arange(self.K)


@dataclass(frozen=True)
class CollocationGrid:
    points: np.ndarray

    @property
    def N_c(self) -> int:
        return int(self.points.size)


@dataclass(frozen=True, eq=False)
class VotfOdeProblem:
    """D^α w = Σ β_i D^{α_i} w + β_0 w + θ on [0, T] with m initial values."""

    leading_order: OrderFunction
    lower_terms: tuple[tuple[OrderFunction, TimeFunction], ...]
    forcing: TimeFunction
    initial_values: tuple[complex, ...]
    T: float
    reaction: Optional[TimeFunction] = None

    def __post_init__(self) -> None:
        require_positive("T", self.T)
        m = self.leading_order.ceiling
        object.__setattr__(self, "initial_values", tuple(complex(h) for h in self.initial_values))
        object.__setattr__(self, "lower_terms", tuple(self.lower_terms))
        if len(self.initial_values) != m:
            raise ProblemValidationError(
                f"leading order has ceiling {m}, so {m} initial values are needed, got {len(self.initial_values)}"
            )
        if self.leading_order.domain_end < self.T * (1 - 1e-12):
            raise ProblemValidationError("leading order is not validated up to T")
        for i, (order, _) in enumerate(self.lower_terms, start=1):
            if order.ceiling > m:
                raise ProblemValidationError(f"lower term {i} has ceiling {order.ceiling} above the leading {m}")
            if order.domain_end < self.T * (1 - 1e-12):
                raise ProblemValidationError(f"order of lower term {i} is not validated up to T")

    @property
    def m(self) -> int:
        return self.leading_order.ceiling


@dataclass(frozen=True, eq=False)
class VotfOdeSolution:
    """w(t) = w̄(t) + Σ q_k t^{δ_k}."""

    homogeneous_poly: PowerProfile
    basis: MuntzBasis
    coefficients: np.ndarray
    residual_norm: float
    rank: int
    collocation_count: int
    ill_conditioned: bool = False
    profile: PowerProfile = field(init=False)

    def __post_init__(self) -> None:
        q = np.asarray(self.coefficients, dtype=complex)
        object.__setattr__(self, "coefficients", q)
        muntz = tuple(PowerTerm(c, p) for c, p in zip(q, self.basis.exponents))
        object.__setattr__(self, "profile", self.homogeneous_poly + PowerProfile(muntz))

    @property
    def T(self) -> float:
        return self.basis.T
