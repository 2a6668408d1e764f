"""Airy function Ai and its derivative for real arguments.

Maclaurin series (in 50-digit decimal arithmetic, so the cancellation for
positive x is harmless) on |x| <= 8, standard asymptotic expansions beyond.
"""
from __future__ import annotations

import math
from decimal import Decimal, localcontext
from functools import lru_cache

from .config import DEFAULT
from .errors import DomainError

AI0 = Decimal("0.3550280538878172392600631860041831763979791741991772")
AIP0 = Decimal("-0.2588194037928067984051835601892039634790911383549345")
SERIES_LIMIT = 8.0
_PREC = 50


def _series(x: float) -> tuple[float, float]:
    with localcontext() as ctx:
        ctx.prec = _PREC
        xd = Decimal(repr(x))
        x3 = xd ** 3
        # f = sum 3^k (1/3)_k x^(3k)/(3k)!,  g = sum 3^k (2/3)_k x^(3k+1)/(3k+1)!
        f_term, g_term = Decimal(1), xd
        f, g = f_term, g_term
        df, dg = Decimal(0), Decimal(1)
        eps = Decimal(10) ** (-_PREC + 5)
        k = 0
        while True:
            k += 1
            f_term = f_term * x3 / ((3 * k - 1) * (3 * k))
            g_term = g_term * x3 / ((3 * k) * (3 * k + 1))
            f += f_term
            g += g_term
            df += f_term * (3 * k) / xd if xd else 0
            dg += g_term * (3 * k + 1) / xd if xd else 0
            if abs(f_term) + abs(g_term) < eps * (abs(f) + abs(g)) and k > 2:
                break
        if not xd:
            df, dg = Decimal(0), Decimal(1)
        ai = AI0 * f + AIP0 * g
        aip = AI0 * df + AIP0 * dg
        return float(ai), float(aip)


@lru_cache(maxsize=None)
def _uv(k: int) -> tuple[float, float]:
    u = 1.0
    for j in range(1, k + 1):
        u *= (6 * j - 5) * (6 * j - 3) * (6 * j - 1) / (216 * j * (2 * j - 1))
    v = -(6 * k + 1) / (6 * k - 1) * u
    return u, v


def _asym_sum(zeta: float, alternate: bool, parity: int | None, use_v: bool) -> float:
    total = 0.0
    prev = math.inf
    k = 0 if parity is None else parity
    step = 1 if parity is None else 2
    j = 0
    while k < 200:
        u, v = _uv(k)
        term = (v if use_v else u) / zeta**k
        if alternate:
            term *= (-1) ** (j if parity is not None else k)
        if abs(term) > prev:
            break
        total += term
        prev = abs(term)
        if abs(term) < 1e-17 * abs(total):
            break
        k += step
        j += 1
    return total


def airy(x: float, scaled: bool = False, x_max: float | None = None) -> tuple[float, float]:
    """(Ai(x), Ai'(x)); with ``scaled`` both carry exp((2/3) x^(3/2)) for x > 0."""
    x = float(x)
    x_max = DEFAULT.airy_x_max if x_max is None else x_max
    if not math.isfinite(x) or abs(x) > x_max:
        raise DomainError(f"Airy argument {x} beyond the supported range {x_max}")
    if abs(x) <= SERIES_LIMIT:
        ai, aip = _series(x)
        if scaled and x > 0:
            s = math.exp(2 / 3 * x**1.5)
            ai, aip = ai * s, aip * s
        return ai, aip
    if x > 0:
        zeta = 2 / 3 * x**1.5
        env = 1.0 if scaled else math.exp(-zeta)
        ai = env / (2 * math.sqrt(math.pi) * x**0.25) * _asym_sum(zeta, True, None, False)
        aip = -env * x**0.25 / (2 * math.sqrt(math.pi)) * _asym_sum(zeta, True, None, True)
        return ai, aip
    z = -x
    zeta = 2 / 3 * z**1.5
    c, s = math.cos(zeta - math.pi / 4), math.sin(zeta - math.pi / 4)
    ai = (c * _asym_sum(zeta, True, 0, False) + s * _asym_sum(zeta, True, 1, False)) / (math.sqrt(math.pi) * z**0.25)
    aip = z**0.25 / math.sqrt(math.pi) * (s * _asym_sum(zeta, True, 0, True) - c * _asym_sum(zeta, True, 1, True))
    return ai, aip
