"""Power profiles Σ c_p t^p: the closed-form time dependence of lifts and exact solutions."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from fracspec.errors import DomainError

# Canonicalization tolerances
COEFFICIENT_TOL = 1e-300
EXPONENT_MERGE_TOL = 1e-12


@dataclass(frozen=True)
class PowerTerm:
    coefficient: complex
    exponent: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.exponent) and self.exponent >= 0):
            raise DomainError(f"power exponent must be finite and >= 0, got {self.exponent!r}")
        c = complex(self.coefficient)
        if not (math.isfinite(c.real) and math.isfinite(c.imag)):
            raise DomainError(f"power coefficient must be finite, got {self.coefficient!r}")
        object.__setattr__(self, "coefficient", c)
        object.__setattr__(self, "exponent", float(self.exponent))


def _canonical(terms: Iterable[PowerTerm]) -> tuple[PowerTerm, ...]:
    merged: list[list] = []
    for term in sorted(terms, key=lambda item: item.exponent):
        if merged and abs(term.exponent - merged[-1][1]) <= EXPONENT_MERGE_TOL:
            merged[-1][0] += term.coefficient
        else:
            merged.append([term.coefficient, term.exponent])
    return tuple(PowerTerm(c, p) for c, p in merged if abs(c) >= COEFFICIENT_TOL)


@dataclass(frozen=True)
class PowerProfile:
    """Finite sum of power terms, kept sorted with distinct exponents."""

    terms: tuple[PowerTerm, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", _canonical(self.terms))

    @classmethod
    def zero(cls) -> PowerProfile:
        return cls(())

    @classmethod
    def monomial(cls, coefficient: complex, exponent: float) -> PowerProfile:
        return cls((PowerTerm(coefficient, exponent),))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[complex, float]]) -> PowerProfile:
        """Build from (coefficient, exponent) pairs."""
        return cls(tuple(PowerTerm(c, p) for c, p in pairs))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def exponents(self) -> np.ndarray:
        return np.array([term.exponent for term in self.terms], dtype=float)

    @property
    def coefficients(self) -> np.ndarray:
        return np.array([term.coefficient for term in self.terms], dtype=complex)

    def evaluate(self, t: float | np.ndarray) -> complex | np.ndarray:
        t_arr = np.asarray(t, dtype=float)
        total = np.zeros(t_arr.shape, dtype=complex)
        for term in self.terms:
            # 0**0 is 1 in numpy, matching the constant term at t=0
            total += term.coefficient * np.power(t_arr, term.exponent)
        if t_arr.ndim == 0:
            return complex(total)
        return total

    def scaled(self, factor: complex) -> PowerProfile:
        return PowerProfile(tuple(PowerTerm(factor * term.coefficient, term.exponent) for term in self.terms))

    def __add__(self, other: PowerProfile) -> PowerProfile:
        if not isinstance(other, PowerProfile):
            return NotImplemented
        return PowerProfile(self.terms + other.terms)

    def __neg__(self) -> PowerProfile:
        return self.scaled(-1)

    def __sub__(self, other: PowerProfile) -> PowerProfile:
        if not isinstance(other, PowerProfile):
            return NotImplemented
        return self + (-other)

    def __mul__(self, factor: complex) -> PowerProfile:
        if isinstance(factor, PowerProfile):
            return NotImplemented
        return self.scaled(factor)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({term.coefficient:g})t^{term.exponent:g}" for term in self.terms)
