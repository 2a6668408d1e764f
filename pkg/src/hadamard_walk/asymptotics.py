"""Large-t estimates of the walk amplitudes in the three regimes.

All estimates are returned in the sign convention of the flip-then-move
engine. For 0 <= n < t the amplitudes are

    psi_L = (-1)^m 2^(-n/2-1) J_L,   psi_R = (-1)^m (1+a)/(1-a) 2^(-n/2-1) J_R,

where J_L, J_R are the contour integrals of :mod:`saddle` with m = (t-n)/2 - 1.
Negative sites are mapped to positive ones by the reflection identities in
:func:`mirror`.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

from .airy import airy
from .config import DEFAULT
from .errors import DomainError, RegimeError
from .regimes import ALPHA_C, Regime, classify
from .saddle import PhaseContext, g_eval, h_eval, saddle_roots

_LN2 = math.log(2)


@dataclass(frozen=True)
class SpinorEstimate:
    psi_L: float
    psi_R: float
    method: str
    error_order: float
    n: int | None = None
    t: int | None = None

    def as_tuple(self) -> tuple[float, float]:
        return self.psi_L, self.psi_R


def _site(n: int, t: int) -> tuple[float, int]:
    if t < 1 or abs(n) >= t:
        raise DomainError(f"need |n| < t, got n={n}, t={t}")
    if (t - n) % 2:
        raise DomainError(f"parity violation: n={n}, t={t}")
    return n / t, (t - n) // 2 - 1


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def mirror(n: int, t: int, positive: Callable[[int, int], tuple[float, float]]) -> tuple[float, float]:
    """Amplitudes at n < 0 from an evaluator valid for n >= -1 (psi_L) and n > 0 (psi_R).

    psi_L(n) = (-1)^(t+1) psi_L(-n-2),  psi_R(n) = (-1)^t (t+n)/(t-n) psi_R(-n).
    """
    left = _sign(t + 1) * positive(-n - 2, t)[0] if n < -1 else positive(n, t)[0]
    right = _sign(t) * (t + n) / (t - n) * positive(-n, t)[1]
    return left, right


def _require(n, t, wanted: Regime, check: bool):
    if not check:
        return
    label = classify(n, t)
    if label.kind is not wanted:
        raise RegimeError(f"(n={n}, t={t}) is {label.kind.value}, not {wanted.value}; "
                          f"half-width {label.half_width:.4g}")


# -- oscillatory regime -------------------------------------------------------

@dataclass(frozen=True)
class OscillatoryParams:
    theta: float
    rho: float
    xi_L: float
    xi_R: float
    envelope_L: float
    envelope_R: float


def oscillatory_params(alpha: float, t: int) -> OscillatoryParams:
    if abs(alpha) >= ALPHA_C:
        raise RegimeError(f"alpha={alpha} is not in the oscillatory range")
    theta = math.acos(-alpha**2 / (1 - alpha**2))
    a = math.atan(alpha / math.sqrt(1 - 2 * alpha**2))
    rho = theta / (1 - alpha) - 2 * alpha / (1 - alpha) * a
    xi_L = theta / (1 - alpha) + math.pi / 4 - (1 + alpha) / (1 - alpha) * a
    xi_R = xi_L - math.pi / 2 + a
    env = math.sqrt(2) / math.sqrt(math.pi * t * math.sqrt(1 - 2 * alpha**2))
    return OscillatoryParams(theta, rho, xi_L, xi_R, env, math.sqrt((1 + alpha) / (1 - alpha)) * env)


def psi_oscillatory(n: int, t: int, check: bool = True) -> SpinorEstimate:
    """Leading oscillatory form, relative error O(1/t); valid for either sign of n."""
    alpha, m = _site(n, t)
    _require(n, t, Regime.OSCILLATORY, check)
    p = oscillatory_params(alpha, t)
    phase = ((1 - alpha) * t / 2 - 1) * p.rho
    s = _sign(m)
    return SpinorEstimate(s * p.envelope_L * math.sin(phase + p.xi_L),
                          s * p.envelope_R * math.sin(phase + p.xi_R), "oscillatory", 1.0, n, t)


def _ccw_direction(h2: complex, zeta: complex) -> complex:
    d = 1j / cmath.sqrt(h2)
    # descent direction that runs counterclockwise around the origin
    return d if (d * (1j * zeta).conjugate()).real > 0 else -d


def saddle_contribution(zeta: complex, ctx: PhaseContext, m: float, order: int = 0, shift: float = 0.0) -> complex:
    """Laplace approximation of the integral through one simple saddle.

    ``order=1`` adds the next term, relative size O(1/m). The result is
    scaled by exp(-shift) inside the exponential, which keeps large m finite.
    """
    h0 = h_eval(zeta, ctx, 0)
    h2, h3, h4 = (h_eval(zeta, ctx, k) for k in (2, 3, 4))
    g0, g1, g2 = (g_eval(zeta, ctx, k) for k in (0, 1, 2))
    d = _ccw_direction(h2, zeta)
    lead = cmath.exp(m * h0 - shift) * g0 * d * math.sqrt(2 * math.pi / m)
    if order == 0:
        return lead
    corr = (-g2 / (2 * h2) + g1 * h3 / (2 * h2**2) + g0 * h4 / (8 * h2**2)
            - 5 * g0 * h3**2 / (24 * h2**3)) / g0
    return lead * (1 + corr / m)


def _scale(n: int, t: int) -> tuple[float, float, float]:
    """Prefactors of J_L and J_R, with 2^(-n/2) returned separately as a log shift."""
    alpha = n / t
    base = 0.5 * _sign((t - n) // 2 - 1)
    return base, base * (1 + alpha) / (1 - alpha), n / 2 * _LN2


def _osc_saddle_positive(order: int):
    def evaluate(n, t):
        alpha, m = n / t, (t - n) // 2 - 1
        zp, zm = saddle_roots(alpha)
        sl, sr, shift = _scale(n, t)
        out = []
        for ctx, s in ((PhaseContext.for_left(alpha), sl), (PhaseContext.for_right(alpha), sr)):
            j = saddle_contribution(zp, ctx, m, order, shift) + saddle_contribution(zm, ctx, m, order, shift)
            out.append(s * j.real)
        return tuple(out)
    return evaluate


def osc_correction(n: int, t: int, order: int = 1, check: bool = True) -> SpinorEstimate:
    """Two-saddle steepest-descent sum at the exact degree m.

    ``order=0`` is the leading term; ``order=1`` adds the next correction,
    leaving relative error O(t^-2).
    """
    alpha, m = _site(n, t)
    _require(n, t, Regime.OSCILLATORY, check)
    if m < 1 and n >= -1:
        raise DomainError("degree m must be >= 1")
    evaluate = _osc_saddle_positive(order)
    left, right = mirror(n, t, evaluate) if n < 0 else evaluate(n, t)
    return SpinorEstimate(left, right, f"oscillatory-s{order}", 1.0 + order, n, t)


# -- exponential regime -------------------------------------------------------

@dataclass(frozen=True)
class ExponentialParams:
    B: float
    B_decay: float
    C_L: float
    C_R: float


def growth_base(alpha: float) -> float:
    """Per-step growth of the bare Jacobi value; equals 2^(1/(2 sqrt2)) at the edge."""
    r = math.sqrt(max(0.0, 2 * alpha**2 - 1))
    return ((1 + 2 * alpha - r) / (1 + alpha)) ** alpha * ((alpha**2 + r) / (1 - alpha**2)) ** ((1 - alpha) / 2)


def exponential_params(alpha: float) -> ExponentialParams:
    """Bases and prefactors for psi ~ C t^(-1/2) B_decay^t, alpha > 1/sqrt2.

    C_L and C_R come from the saddle formula at zeta_minus.
    """
    if not ALPHA_C < alpha < 1:
        raise RegimeError(f"alpha={alpha} is not in the exponential range")
    _, zm = saddle_roots(alpha)
    ctx_l, ctx_r = PhaseContext.for_left(alpha), PhaseContext.for_right(alpha)
    re_h = h_eval(zm, ctx_l).real
    b_decay = math.exp(-alpha / 2 * _LN2 + (1 - alpha) / 2 * re_h)
    h2 = abs(h_eval(zm, ctx_l, 2))
    common = 0.5 * math.exp(-re_h) * math.sqrt(2 * math.pi / h2) * math.sqrt(2 / (1 - alpha))
    c_l = common * abs(g_eval(zm, ctx_l))
    c_r = common * abs(g_eval(zm, ctx_r)) * (1 + alpha) / (1 - alpha)
    return ExponentialParams(growth_base(alpha), b_decay, c_l, c_r)


def _exp_positive(n, t):
    alpha, m = n / t, (t - n) // 2 - 1
    p = exponential_params(alpha)
    _, zm = saddle_roots(alpha)
    mag = t**-0.5 * p.B_decay**t
    sl, sr, shift = _scale(n, t)
    out = []
    for ctx, c, s in ((PhaseContext.for_left(alpha), p.C_L, sl), (PhaseContext.for_right(alpha), p.C_R, sr)):
        # the sign follows the single-saddle value at the exact degree
        j = saddle_contribution(zm, ctx, m, 0, shift) if m >= 1 else 1.0
        out.append(math.copysign(c * mag, s * j.real))
    return tuple(out)


def psi_exponential(n: int, t: int, check: bool = True) -> SpinorEstimate:
    """C t^(-1/2) B_decay^t per component, relative error O(1/t)."""
    alpha, m = _site(n, t)
    _require(n, t, Regime.EXPONENTIAL, check)
    if not ALPHA_C < abs(alpha) < 1:
        raise RegimeError(f"alpha={alpha} is not in the exponential range")
    left, right = mirror(n, t, _exp_positive) if n < 0 else _exp_positive(n, t)
    return SpinorEstimate(left, right, "exponential", 1.0, n, t)


# -- transitional regime ------------------------------------------------------

@dataclass(frozen=True)
class AiryParams:
    zeta: float
    eta: complex
    a0: complex
    b0: complex
    m: float


def _disk_h(z, ctx):
    return h_eval(z, ctx, 0, branch="disk")


def _dz_du(u: complex, z: complex, ctx) -> complex:
    r = cmath.sqrt(2 * u / h_eval(z, ctx, 2))
    return -r if r.real > 0 else r


def airy_params(alpha: float, m: float, ctx: PhaseContext) -> AiryParams:
    """Cubic-map variables and leading coefficients for the two-saddle integral."""
    disc = 2 * alpha**2 - 1
    if abs(disc) < 1e-9:
        zc = complex(saddle_roots(alpha)[0].real)
        h3, h4 = h_eval(zc, ctx, 3).real, h_eval(zc, ctx, 4).real
        k = math.copysign(abs(h3 / 2) ** (1 / 3), h3)
        g0, g1 = g_eval(zc, ctx), g_eval(zc, ctx, 1)
        return AiryParams(0.0, _disk_h(zc, ctx), g0 / k, g1 / k**2 - g0 * h4 / (6 * h3 * k**2), m)
    zp, zm = saddle_roots(alpha)
    hp, hm = _disk_h(zp, ctx), _disk_h(zm, ctx)
    diff = hp - hm
    eta = (hp + hm) / 2
    if disc > 0:
        z = (0.75 * diff.real) ** (2 / 3)
        u = complex(math.sqrt(z))
    else:
        z = -((0.75 * abs(diff)) ** (2 / 3))
        u = (hm - eta) / (-2 / 3 * z)
    phi_m = g_eval(zm, ctx) * _dz_du(u, zm, ctx)
    phi_p = g_eval(zp, ctx) * _dz_du(-u, zp, ctx)
    return AiryParams(z, eta, (phi_m + phi_p) / 2, (phi_m - phi_p) / (2 * u), m)


def airy_jacobi(alpha: float, m: float, ctx: PhaseContext, shift: float = 0.0) -> complex:
    """Uniform Airy approximation of the Jacobi contour integral, times exp(-shift)."""
    p = airy_params(alpha, m, ctx)
    x = m ** (2 / 3) * p.zeta
    ai, aip = airy(x)
    return -2j * math.pi * cmath.exp(m * p.eta - shift) * (p.a0 * ai / m ** (1 / 3) - p.b0 * aip / m ** (2 / 3))


def _airy_positive(n, t):
    alpha, m = n / t, (t - n) // 2 - 1
    sl, sr, shift = _scale(n, t)
    jl = airy_jacobi(alpha, m, PhaseContext.for_left(alpha), shift)
    jr = airy_jacobi(alpha, m, PhaseContext.for_right(alpha), shift)
    return sl * jl.real, sr * jr.real


def psi_airy(n: int, t: int, check: bool = True, band: float | None = None) -> SpinorEstimate:
    """Uniform estimate across the transition, relative error O(m^(-1/3))."""
    alpha, m = _site(n, t)
    band = DEFAULT.airy_band if band is None else band
    if check and abs(abs(alpha) - ALPHA_C) > band:
        raise RegimeError(f"alpha={alpha} is farther than {band} from the transition")
    if m < 1 and n >= 0:
        raise DomainError("degree m must be >= 1")
    left, right = mirror(n, t, _airy_positive) if n < 0 else _airy_positive(n, t)
    return SpinorEstimate(left, right, "airy", 1 / 3, n, t)


def point_formula(m: float, ctx: PhaseContext, corrected: bool = True, shift: float = 0.0) -> complex:
    """Jacobi integral at the coalescence point alpha = 1/sqrt2 from a single cubic saddle.

    With ``corrected=False`` this is g (6/(m h'''))^(1/3) e^(i pi/3) Gamma(1/3) / 3,
    the one-ray form. The corrected form includes both rays of the contour
    (a factor sqrt 3) and the factor exp(m h - shift).
    """
    zc = complex(math.sqrt(2) - 1)
    h3 = h_eval(zc, ctx, 3).real
    g = g_eval(zc, ctx)
    val = g / 3 * (6 / (m * abs(h3))) ** (1 / 3) * cmath.exp(1j * math.pi / 3) * math.gamma(1 / 3)
    if not corrected:
        return val
    return val * math.sqrt(3) * cmath.exp(m * _disk_h(zc, ctx) - shift)
