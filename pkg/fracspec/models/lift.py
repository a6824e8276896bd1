"""Separable boundary lift s(x, t) = Σ ψ_i(x) γ_i(t)."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from fracspec.errors import ProblemValidationError
from fracspec.models.profile import PowerProfile
from fracspec.models.spatial import SpatialFunction


@dataclass(frozen=True)
class LiftMetadata:
    kind: str  # "zero", "linear-1d" or "mq-rbf"
    centers: np.ndarray | None = None
    c_mq: float | None = None
    fit_residual: float = 0.0
    rank: int | None = None
    ill_conditioned: bool = False
    correction_degree: int | None = None


@dataclass(frozen=True, eq=False)
class LiftFunction:
    shapes: tuple[SpatialFunction, ...]
    time_profiles: tuple[PowerProfile, ...]
    metadata: LiftMetadata = field(default_factory=lambda: LiftMetadata("zero"))

    def __post_init__(self) -> None:
        if len(self.shapes) != len(self.time_profiles):
            raise ProblemValidationError("lift needs one time profile per shape")

    @classmethod
    def zero(cls) -> LiftFunction:
        return cls((), ())

    @property
    def is_zero(self) -> bool:
        return all(profile.is_zero for profile in self.time_profiles)

    def value(self, x: np.ndarray, t: float) -> np.ndarray:
        return self.values(x, np.array([t]))[0]

    def gradient(self, x: np.ndarray, t: float, axis: int) -> np.ndarray:
        return self.values(x, np.array([t]), axis=axis)[0]

    def values(self, x: np.ndarray, times: np.ndarray, axis: int | None = None) -> np.ndarray:
        """s (or ∂s/∂x_axis) on a (times × points) grid."""
        times = np.asarray(times, dtype=float)
        total = np.zeros((times.size,) + np.shape(x)[:-1], dtype=complex)
        for shape, profile in zip(self.shapes, self.time_profiles):
            if profile.is_zero:
                continue
            spatial = shape.value(x) if axis is None else shape.gradient(x, axis)
            total += np.multiply.outer(profile.evaluate(times), spatial)
        return total
