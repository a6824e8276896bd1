"""Box domains, sine modes and the spatial symbols that act on them."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from fracspec.errors import DomainError, ProblemValidationError

SYMBOL_KINDS = ("identity", "laplacian", "bilaplacian")


@dataclass(frozen=True)
class BoxDomain:
    """Ω = Π [0, L_i], d ∈ {1, 2}."""

    lengths: tuple[float, ...]

    def __post_init__(self) -> None:
        lengths = tuple(float(value) for value in self.lengths)
        if len(lengths) not in (1, 2):
            raise ProblemValidationError(f"only 1D and 2D boxes are supported, got d={len(lengths)}")
        if not all(math.isfinite(value) and value > 0 for value in lengths):
            raise ProblemValidationError(f"box lengths must be positive, got {lengths}")
        object.__setattr__(self, "lengths", lengths)

    @property
    def d(self) -> int:
        return len(self.lengths)

    @property
    def volume(self) -> float:
        return float(np.prod(self.lengths))

    def contains(self, points: np.ndarray, tol: float = 1e-12) -> np.ndarray:
        """Mask of points inside the closed box."""
        lengths = np.asarray(self.lengths)
        slack = tol * np.maximum(1.0, lengths)
        return np.all((points >= -slack) & (points <= lengths + slack), axis=-1)


def as_points(x: float | np.ndarray, d: int) -> np.ndarray:
    """Normalize x to an array of points with trailing axis of length d.

    In 1D a plain vector is read as a list of points.
    """
    arr = np.asarray(x, dtype=float)
    if d == 1 and (arr.ndim == 0 or arr.shape[-1] != 1):
        arr = arr[..., None]
    if arr.shape[-1] != d:
        raise DomainError(f"points must have a trailing axis of length {d}, got shape {arr.shape}")
    return arr


@dataclass(frozen=True)
class SineMode:
    """Π sin(n_i π x_i / L_i) for a multi-index n."""

    index: tuple[int, ...]
    domain: BoxDomain

    def __post_init__(self) -> None:
        index = tuple(int(n) for n in self.index)
        if len(index) != self.domain.d or any(n < 1 for n in index):
            raise DomainError(f"mode index {self.index} invalid for a {self.domain.d}D box")
        object.__setattr__(self, "index", index)

    @property
    def wave_numbers(self) -> np.ndarray:
        return np.array(self.index, dtype=float) * np.pi / np.asarray(self.domain.lengths)

    def value(self, x: np.ndarray) -> np.ndarray:
        points = as_points(x, self.domain.d)
        return np.prod(np.sin(points * self.wave_numbers), axis=-1)

    def gradient(self, x: np.ndarray, axis: int) -> np.ndarray:
        points = as_points(x, self.domain.d)
        k = self.wave_numbers
        factors = np.sin(points * k)
        factors[..., axis] = k[axis] * np.cos(points[..., axis] * k[axis])
        return np.prod(factors, axis=-1)


@dataclass(frozen=True)
class SpatialSymbol:
    """Multiplier a spatial operator contributes on a sine mode."""

    kind: str

    def __post_init__(self) -> None:
        if self.kind not in SYMBOL_KINDS:
            raise ProblemValidationError(
                f"unsupported spatial operator {self.kind!r}; expected one of {', '.join(SYMBOL_KINDS)}"
            )

    def eigenvalue(self, mode: SineMode) -> float:
        if self.kind == "identity":
            return 1.0
        k2 = float(np.sum(mode.wave_numbers**2))
        if self.kind == "laplacian":
            return -k2
        return k2 * k2


IDENTITY = SpatialSymbol("identity")
LAPLACIAN = SpatialSymbol("laplacian")
BILAPLACIAN = SpatialSymbol("bilaplacian")
