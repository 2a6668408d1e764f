"""Which asymptotic regime a site (n, t) falls into."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .config import DEFAULT
from .errors import DomainError

ALPHA_C = 1 / math.sqrt(2)


class Regime(enum.Enum):
    OSCILLATORY = "oscillatory"
    TRANSITIONAL = "transitional"
    EXPONENTIAL = "exponential"


@dataclass(frozen=True)
class RegimeLabel:
    kind: Regime
    window_scale: float
    half_width: float
    alpha: float

    def __str__(self):
        return self.kind.value


def classify(n: int, t: int, w0: float | None = None) -> RegimeLabel:
    """Transitional iff ||a| - 1/sqrt2| <= w0 t^(-2/3), with a = n/t."""
    if t < 1:
        raise DomainError("t must be >= 1")
    if abs(n) > t:
        raise DomainError(f"|n|={abs(n)} exceeds t={t}")
    w0 = DEFAULT.w0 if w0 is None else w0
    alpha = n / t
    width = w0 * t ** (-2 / 3)
    gap = abs(alpha) - ALPHA_C
    if abs(gap) <= width:
        kind = Regime.TRANSITIONAL
    elif gap < 0:
        kind = Regime.OSCILLATORY
    else:
        kind = Regime.EXPONENTIAL
    return RegimeLabel(kind, w0, width, alpha)
