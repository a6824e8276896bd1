"""Variable fractional order α(t) with its integer ceiling."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from fracspec.checks import require_int_at_least, require_positive
from fracspec.errors import ProblemValidationError
from fracspec.models.timefn import ConstantTime, TimeFunction

VALIDATION_POINTS = 1024
# Lower clip for saturated orders: α stays strictly above m-1
BAND_MARGIN = 1e-10
_UPPER_SLACK = 1e-12


@dataclass(frozen=True)
class OrderFunction:
    """α(t) on [0, domain_end] with m-1 < α(t) <= m.

    The band is checked on a uniform grid of VALIDATION_POINTS samples; a
    violation between samples goes unnoticed. With ``saturate`` the values are
    clipped into (m-1, m] instead, for published orders that leave their band
    on long horizons.
    """

    fn: TimeFunction
    ceiling: int
    domain_end: float
    saturate: bool = False
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        require_int_at_least("ceiling", self.ceiling, 1)
        require_positive("domain_end", self.domain_end)
        grid = np.linspace(0.0, self.domain_end, VALIDATION_POINTS)
        try:
            values = self.eval(grid)
        except (TypeError, ValueError) as exc:
            raise ProblemValidationError(f"order {self.label or self.fn!r} is not evaluable: {exc}") from exc
        if not np.all(np.isfinite(values)):
            raise ProblemValidationError(f"order {self.label or self.fn!r} has non-finite values on [0, T]")
        m = self.ceiling
        bad = (values <= m - 1) | (values > m + _UPPER_SLACK)
        if np.any(bad):
            t_bad = grid[np.argmax(bad)]
            raise ProblemValidationError(
                f"order {self.label or 'α'}({t_bad:g}) = {values[np.argmax(bad)]:g} leaves the band ({m - 1}, {m}]"
            )

    def eval(self, t: float | np.ndarray) -> float | np.ndarray:
        t_arr = np.asarray(t, dtype=float)
        values = np.broadcast_to(np.asarray(self.fn(t_arr), dtype=float), t_arr.shape)
        if self.saturate:
            values = np.clip(values, self.ceiling - 1 + BAND_MARGIN, self.ceiling)
        if t_arr.ndim == 0:
            return float(values)
        return np.array(values)

    @classmethod
    def constant(cls, value: float, T: float) -> OrderFunction:
        """α ≡ value; the ceiling is ⌈value⌉."""
        require_positive("order", value)
        return cls(ConstantTime(float(value)), math.ceil(value - 1e-12), T, label=f"{value:g}")

    @classmethod
    def from_callable(
        cls, fn: TimeFunction, ceiling: int, T: float, *, saturate: bool = False, label: str = ""
    ) -> OrderFunction:
        return cls(fn, ceiling, T, saturate=saturate, label=label)
