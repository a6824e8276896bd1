"""Closed-form time functions used for orders and term coefficients.

Every time function is a callable t -> value that accepts numpy arrays.
Plain lambdas work too; the dataclasses below exist so problem files and the
benchmark registry can describe coefficients declaratively.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

TimeFunction = Callable[[np.ndarray], Union[np.ndarray, complex, float]]


def evaluate_time_function(fn: TimeFunction | complex | float, t: np.ndarray) -> np.ndarray:
    """Evaluate fn on t and broadcast scalar results to t's shape (complex dtype)."""
    t = np.asarray(t, dtype=float)
    value = fn(t) if callable(fn) else fn
    return np.broadcast_to(np.asarray(value, dtype=complex), t.shape).copy()


@dataclass(frozen=True)
class ConstantTime:
    value: complex

    def __call__(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        return np.full(t.shape, self.value, dtype=complex if isinstance(self.value, complex) else float)


@dataclass(frozen=True)
class PolynomialTime:
    """Σ c_i t^i with ascending coefficients."""

    coefficients: tuple[complex, ...]

    def __call__(self, t: np.ndarray) -> np.ndarray:
        return np.polynomial.polynomial.polyval(np.asarray(t, dtype=float), np.asarray(self.coefficients))


@dataclass(frozen=True)
class SineTime:
    """a + b·sin(c·t)."""

    a: float
    b: float
    c: float = 1.0

    def __call__(self, t: np.ndarray) -> np.ndarray:
        return self.a + self.b * np.sin(self.c * np.asarray(t, dtype=float))


@dataclass(frozen=True)
class CosineTime:
    """a + b·cos(c·t)."""

    a: float
    b: float
    c: float = 1.0

    def __call__(self, t: np.ndarray) -> np.ndarray:
        return self.a + self.b * np.cos(self.c * np.asarray(t, dtype=float))


@dataclass(frozen=True)
class ExpTime:
    """a + b·exp(c·t)."""

    a: float
    b: float
    c: float = 1.0

    def __call__(self, t: np.ndarray) -> np.ndarray:
        return self.a + self.b * np.exp(self.c * np.asarray(t, dtype=float))


@dataclass(frozen=True)
class ScaledTime:
    """scale · fn(t); used when an equation is divided through by its leading coefficient."""

    scale: complex
    fn: TimeFunction

    def __call__(self, t: np.ndarray) -> np.ndarray:
        return self.scale * evaluate_time_function(self.fn, t)


@dataclass(frozen=True)
class SumTime:
    """Σ weight_j · fn_j(t)."""

    parts: tuple[tuple[complex, TimeFunction], ...]

    def __call__(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        total = np.zeros(t.shape, dtype=complex)
        for weight, fn in self.parts:
            total += weight * evaluate_time_function(fn, t)
        return total
