"""Error metrics record for one benchmark cell."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from fracspec.errors import DomainError


@dataclass(frozen=True)
class ErrorReport:
    merr: float
    rerr: float
    ao: Optional[float] = None
    co: Optional[float] = None
    n_t: int = 0
    k_t: int = 0
    parameters: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.merr < 0 or self.rerr < 0:
            raise DomainError("error metrics are non-negative")
