"""Spatial expression set with closed-form derivatives, and separable fields.

Spatial functions take points shaped (..., d) and return arrays shaped (...).
Each one knows its value, gradient component, Laplacian and bilaplacian, so
the symbol of every supported operator can be applied exactly.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import legendre as nleg
from numpy.polynomial import polynomial as npoly

from fracspec.errors import DomainError, ProblemValidationError
from fracspec.models.domain import SpatialSymbol
from fracspec.models.profile import PowerProfile


class SpatialFunction(ABC):
    """Base class of the expression set."""

    @abstractmethod
    def value(self, x: np.ndarray) -> np.ndarray: ...

    @abstractmethod
    def gradient(self, x: np.ndarray, axis: int) -> np.ndarray: ...

    @abstractmethod
    def laplacian(self, x: np.ndarray) -> np.ndarray: ...

    @abstractmethod
    def bilaplacian(self, x: np.ndarray) -> np.ndarray: ...

    def apply(self, symbol: SpatialSymbol, x: np.ndarray) -> np.ndarray:
        if symbol.kind == "identity":
            return self.value(x)
        if symbol.kind == "laplacian":
            return self.laplacian(x)
        return self.bilaplacian(x)

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return self.value(x)

    def laplacian_function(self) -> SpatialFunction:
        """Δ self as a spatial function; closed form where the set allows it."""
        return LaplacianOf(self)


@dataclass(frozen=True, eq=False)
class Polynomial(SpatialFunction):
    """Power-series coefficients c[i] (1D) or c[i, j] for x1^i x2^j (2D)."""

    coefficients: np.ndarray

    def __post_init__(self) -> None:
        c = np.asarray(self.coefficients)
        if c.ndim not in (1, 2):
            raise ProblemValidationError("polynomial coefficients must be a 1D or 2D array")
        object.__setattr__(self, "coefficients", c)

    @property
    def d(self) -> int:
        return self.coefficients.ndim

    def _eval(self, c: np.ndarray, x: np.ndarray) -> np.ndarray:
        if self.d == 1:
            return npoly.polyval(x[..., 0], c)
        return npoly.polyval2d(x[..., 0], x[..., 1], c)

    def value(self, x: np.ndarray) -> np.ndarray:
        return self._eval(self.coefficients, x)

    def gradient(self, x: np.ndarray, axis: int) -> np.ndarray:
        return self._eval(npoly.polyder(self.coefficients, 1, axis=axis), x)

    def _laplacian_parts(self, c: np.ndarray) -> list[np.ndarray]:
        return [npoly.polyder(c, 2, axis=axis) for axis in range(self.d)]

    def laplacian(self, x: np.ndarray) -> np.ndarray:
        return sum(self._eval(part, x) for part in self._laplacian_parts(self.coefficients))

    def bilaplacian(self, x: np.ndarray) -> np.ndarray:
        total = 0
        for part in self._laplacian_parts(self.coefficients):
            for inner in self._laplacian_parts(part):
                total = total + self._eval(inner, x)
        return total

    def laplacian_function(self) -> SpatialFunction:
        c = self.coefficients
        return Polynomial(sum(_pad_to(part, c.shape) for part in self._laplacian_parts(c)))


@dataclass(frozen=True, eq=False)
class ExpSum(SpatialFunction):
    """Σ_j w_j exp(k_j · x)."""

    weights: np.ndarray
    wave_vectors: np.ndarray

    def __post_init__(self) -> None:
        w = np.atleast_1d(np.asarray(self.weights, dtype=complex))
        k = np.atleast_2d(np.asarray(self.wave_vectors, dtype=float))
        if k.shape[0] != w.shape[0]:
            raise ProblemValidationError("exp-sum needs one wave vector per weight")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "wave_vectors", k)

    def _terms(self, x: np.ndarray) -> np.ndarray:
        return np.exp(x @ self.wave_vectors.T)

    def value(self, x: np.ndarray) -> np.ndarray:
        return self._terms(x) @ self.weights

    def gradient(self, x: np.ndarray, axis: int) -> np.ndarray:
        return self._terms(x) @ (self.weights * self.wave_vectors[:, axis])

    def laplacian(self, x: np.ndarray) -> np.ndarray:
        k2 = np.sum(self.wave_vectors**2, axis=1)
        return self._terms(x) @ (self.weights * k2)

    def bilaplacian(self, x: np.ndarray) -> np.ndarray:
        k2 = np.sum(self.wave_vectors**2, axis=1)
        return self._terms(x) @ (self.weights * k2 * k2)

    def laplacian_function(self) -> SpatialFunction:
        return ExpSum(self.weights * np.sum(self.wave_vectors**2, axis=1), self.wave_vectors)


@dataclass(frozen=True, eq=False)
class SechSum(SpatialFunction):
    """Σ_j w_j sech(x − s_j), one-dimensional."""

    weights: np.ndarray
    shifts: np.ndarray

    def __post_init__(self) -> None:
        w = np.atleast_1d(np.asarray(self.weights, dtype=complex))
        s = np.atleast_1d(np.asarray(self.shifts, dtype=float))
        if w.shape != s.shape:
            raise ProblemValidationError("sech-sum needs one shift per weight")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "shifts", s)

    def _sech(self, x: np.ndarray) -> np.ndarray:
        return 1.0 / np.cosh(x[..., 0:1] - self.shifts)

    def value(self, x: np.ndarray) -> np.ndarray:
        return self._sech(x) @ self.weights

    def gradient(self, x: np.ndarray, axis: int) -> np.ndarray:
        if axis != 0:
            raise DomainError("sech-sum is one-dimensional")
        S = self._sech(x)
        return (-S * np.tanh(x[..., 0:1] - self.shifts)) @ self.weights

    def laplacian(self, x: np.ndarray) -> np.ndarray:
        S = self._sech(x)
        return (S - 2 * S**3) @ self.weights

    def bilaplacian(self, x: np.ndarray) -> np.ndarray:
        S = self._sech(x)
        return (S - 20 * S**3 + 24 * S**5) @ self.weights


@dataclass(frozen=True, eq=False)
class Gaussian(SpatialFunction):
    """w · exp(−a |x − c|²)."""

    weight: complex
    width: float
    center: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "center", np.atleast_1d(np.asarray(self.center, dtype=float)))

    def _parts(self, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        r2 = np.sum((x - self.center) ** 2, axis=-1)
        return r2, self.weight * np.exp(-self.width * r2)

    def value(self, x: np.ndarray) -> np.ndarray:
        return self._parts(x)[1]

    def gradient(self, x: np.ndarray, axis: int) -> np.ndarray:
        _, g = self._parts(x)
        return -2 * self.width * (x[..., axis] - self.center[axis]) * g

    def laplacian(self, x: np.ndarray) -> np.ndarray:
        r2, g = self._parts(x)
        a, d = self.width, self.center.size
        return (4 * a * a * r2 - 2 * a * d) * g

    def bilaplacian(self, x: np.ndarray) -> np.ndarray:
        r2, g = self._parts(x)
        a, d = self.width, self.center.size
        return (16 * a**4 * r2 * r2 - 16 * (d + 2) * a**3 * r2 + 4 * d * (d + 2) * a * a) * g


@dataclass(frozen=True, eq=False)
class SineProduct(SpatialFunction):
    """A · Π sin(k_i x_i + φ_i)."""

    amplitude: complex
    wave_numbers: np.ndarray
    phases: np.ndarray

    def __post_init__(self) -> None:
        k = np.atleast_1d(np.asarray(self.wave_numbers, dtype=float))
        phi = np.atleast_1d(np.asarray(self.phases, dtype=float))
        if k.shape != phi.shape:
            raise ProblemValidationError("sine product needs one phase per wave number")
        object.__setattr__(self, "wave_numbers", k)
        object.__setattr__(self, "phases", phi)

    def value(self, x: np.ndarray) -> np.ndarray:
        return self.amplitude * np.prod(np.sin(x * self.wave_numbers + self.phases), axis=-1)

    def gradient(self, x: np.ndarray, axis: int) -> np.ndarray:
        factors = np.sin(x * self.wave_numbers + self.phases)
        k = self.wave_numbers[axis]
        factors[..., axis] = k * np.cos(x[..., axis] * k + self.phases[axis])
        return self.amplitude * np.prod(factors, axis=-1)

    def laplacian(self, x: np.ndarray) -> np.ndarray:
        return -float(np.sum(self.wave_numbers**2)) * self.value(x)

    def bilaplacian(self, x: np.ndarray) -> np.ndarray:
        return float(np.sum(self.wave_numbers**2)) ** 2 * self.value(x)

    def laplacian_function(self) -> SpatialFunction:
        k2 = float(np.sum(self.wave_numbers**2))
        return SineProduct(-k2 * self.amplitude, self.wave_numbers, self.phases)


@dataclass(frozen=True, eq=False)
class Multiquadric(SpatialFunction):
    """ψ = sqrt(|x − s|² + c²), the lift kernel."""

    center: np.ndarray
    shape: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "center", np.atleast_1d(np.asarray(self.center, dtype=float)))

    def _r2(self, x: np.ndarray) -> np.ndarray:
        return np.sum((x - self.center) ** 2, axis=-1)

    def value(self, x: np.ndarray) -> np.ndarray:
        return np.sqrt(self._r2(x) + self.shape**2)

    def gradient(self, x: np.ndarray, axis: int) -> np.ndarray:
        return (x[..., axis] - self.center[axis]) / self.value(x)

    def laplacian(self, x: np.ndarray) -> np.ndarray:
        r2, c2, d = self._r2(x), self.shape**2, self.center.size
        return ((d - 1) * r2 + d * c2) / (r2 + c2) ** 1.5

    def bilaplacian(self, x: np.ndarray) -> np.ndarray:
        s, c2, d = self._r2(x), self.shape**2, self.center.size
        numerator = (d - 1) * (3 - d) * s * s + (-2 * d * d + 2 * d + 12) * c2 * s - d * (d + 2) * c2 * c2
        return numerator / (s + c2) ** 3.5


@dataclass(frozen=True, eq=False)
class Translated(SpatialFunction):
    """inner evaluated at x + offset (moves a box with non-zero origin to [0, L])."""

    inner: SpatialFunction
    offset: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "offset", np.atleast_1d(np.asarray(self.offset, dtype=float)))

    def value(self, x: np.ndarray) -> np.ndarray:
        return self.inner.value(x + self.offset)

    def gradient(self, x: np.ndarray, axis: int) -> np.ndarray:
        return self.inner.gradient(x + self.offset, axis)

    def laplacian(self, x: np.ndarray) -> np.ndarray:
        return self.inner.laplacian(x + self.offset)

    def bilaplacian(self, x: np.ndarray) -> np.ndarray:
        return self.inner.bilaplacian(x + self.offset)

    def laplacian_function(self) -> SpatialFunction:
        return Translated(self.inner.laplacian_function(), self.offset)


@dataclass(frozen=True, eq=False)
class LinearCombination(SpatialFunction):
    """Σ_j w_j f_j(x)."""

    parts: tuple[tuple[complex, SpatialFunction], ...]

    def _sum(self, method: str, x: np.ndarray, *args) -> np.ndarray:
        total = np.zeros(x.shape[:-1], dtype=complex)
        for weight, fn in self.parts:
            if weight != 0:
                total = total + weight * getattr(fn, method)(x, *args)
        return total

    def value(self, x: np.ndarray) -> np.ndarray:
        return self._sum("value", x)

    def gradient(self, x: np.ndarray, axis: int) -> np.ndarray:
        return self._sum("gradient", x, axis)

    def laplacian(self, x: np.ndarray) -> np.ndarray:
        return self._sum("laplacian", x)

    def bilaplacian(self, x: np.ndarray) -> np.ndarray:
        return self._sum("bilaplacian", x)

    def laplacian_function(self) -> SpatialFunction:
        return LinearCombination(tuple((weight, fn.laplacian_function()) for weight, fn in self.parts))


@dataclass(frozen=True, eq=False)
class LaplacianOf(SpatialFunction):
    """Δ inner, for Δu boundary data whose Laplacian leaves the expression set.

    Only the value and its Laplacian are available; boundary data never need more.
    """

    inner: SpatialFunction

    def value(self, x: np.ndarray) -> np.ndarray:
        return self.inner.laplacian(x)

    def gradient(self, x: np.ndarray, axis: int) -> np.ndarray:
        raise ProblemValidationError(
            f"the gradient of Δ{type(self.inner).__name__} has no closed form; state it as an explicit field"
        )

    def laplacian(self, x: np.ndarray) -> np.ndarray:
        return self.inner.bilaplacian(x)

    def bilaplacian(self, x: np.ndarray) -> np.ndarray:
        raise ProblemValidationError(
            f"Δ³ of {type(self.inner).__name__} is beyond the expression set; state it as an explicit field"
        )


def _pad_to(c: np.ndarray, shape: tuple[int, ...]) -> np.ndarray:
    out = np.zeros(shape, dtype=np.result_type(c, float))
    out[tuple(slice(0, n) for n in c.shape)] = c
    return out


@dataclass(frozen=True, eq=False)
class LegendreSeries(SpatialFunction):
    """Σ c[i, j] P_i(ξ1) P_j(ξ2) with ξ = 2x/L − 1, a polynomial on the box [0, L]."""

    coefficients: np.ndarray
    lengths: np.ndarray

    def __post_init__(self) -> None:
        c = np.asarray(self.coefficients, dtype=complex)
        lengths = np.atleast_1d(np.asarray(self.lengths, dtype=float))
        if c.ndim != lengths.size:
            raise ProblemValidationError("Legendre coefficients need one axis per box dimension")
        object.__setattr__(self, "coefficients", c)
        object.__setattr__(self, "lengths", lengths)

    @property
    def scales(self) -> np.ndarray:
        return 2.0 / self.lengths

    def _eval(self, c: np.ndarray, x: np.ndarray) -> np.ndarray:
        xi = 2.0 * x / self.lengths - 1.0
        if c.ndim == 1:
            return nleg.legval(xi[..., 0], c)
        return nleg.legval2d(xi[..., 0], xi[..., 1], c)

    def _laplacian_coefficients(self, c: np.ndarray) -> np.ndarray:
        return sum(
            _pad_to(nleg.legder(c, 2, scl=self.scales[axis], axis=axis), c.shape) for axis in range(c.ndim)
        )

    def value(self, x: np.ndarray) -> np.ndarray:
        return self._eval(self.coefficients, x)

    def gradient(self, x: np.ndarray, axis: int) -> np.ndarray:
        return self._eval(nleg.legder(self.coefficients, 1, scl=self.scales[axis], axis=axis), x)

    def laplacian(self, x: np.ndarray) -> np.ndarray:
        return self._eval(self._laplacian_coefficients(self.coefficients), x)

    def bilaplacian(self, x: np.ndarray) -> np.ndarray:
        return self._eval(self._laplacian_coefficients(self._laplacian_coefficients(self.coefficients)), x)

    def laplacian_function(self) -> SpatialFunction:
        return LegendreSeries(self._laplacian_coefficients(self.coefficients), self.lengths)


@dataclass(frozen=True, eq=False)
class SeparableField:
    """u(x, t) = Σ_j X_j(x) · P_j(t)."""

    terms: tuple[tuple[SpatialFunction, PowerProfile], ...]

    def value(self, x: np.ndarray, t: float) -> np.ndarray:
        return self._combine(x, t, lambda fn: fn.value(x))

    def gradient(self, x: np.ndarray, t: float, axis: int) -> np.ndarray:
        return self._combine(x, t, lambda fn: fn.gradient(x, axis))

    def apply(self, symbol: SpatialSymbol, x: np.ndarray, t: float) -> np.ndarray:
        return self._combine(x, t, lambda fn: fn.apply(symbol, x))

    def _combine(self, x: np.ndarray, t: float, spatial) -> np.ndarray:
        total = np.zeros(np.shape(x)[:-1], dtype=complex)
        for fn, profile in self.terms:
            if not profile.is_zero:
                total = total + spatial(fn) * profile.evaluate(t)
        return total

    def values(self, x: np.ndarray, times: np.ndarray, axis: int | None = None) -> np.ndarray:
        """Samples on a (times × points) grid; gradient component when axis is given."""
        times = np.asarray(times, dtype=float)
        total = np.zeros((times.size,) + np.shape(x)[:-1], dtype=complex)
        for fn, profile in self.terms:
            spatial = fn.value(x) if axis is None else fn.gradient(x, axis)
            total += np.multiply.outer(profile.evaluate(times), spatial)
        return total

    def profile_at(self, point: np.ndarray) -> PowerProfile:
        """Time profile u(point, ·) at a single point."""
        point = np.asarray(point, dtype=float)
        profile = PowerProfile.zero()
        for fn, part in self.terms:
            profile = profile + part.scaled(complex(fn.value(point)))
        return profile

    def laplacian_field(self) -> SeparableField:
        return SeparableField(tuple((fn.laplacian_function(), profile) for fn, profile in self.terms))

    def scaled(self, factor: complex) -> SeparableField:
        return SeparableField(tuple((fn, profile.scaled(factor)) for fn, profile in self.terms))
