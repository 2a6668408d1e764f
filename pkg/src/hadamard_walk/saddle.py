"""Phase function h, prefactor g, their saddle points and steepest-descent contours.

The Jacobi value behind each amplitude is the contour integral

    J = oint exp(m h(z)) g(z) dz,   m = (t - n)/2 - 1,

with h(z) = ln(z^2 - 1) - ln 2 - ln z + b ln(1 + z), b = 2a/(1 - a), a = n/t,
and g(z) = (1 + z)^beta (1 - z)^gamma / (2 pi i z).
"""
from __future__ import annotations

import cmath
import csv
import io
import math
import warnings
from dataclasses import dataclass, field

from .config import DEFAULT
from .errors import DomainError

ALPHA_C = 1 / math.sqrt(2)
_LN2 = math.log(2)


@dataclass(frozen=True)
class PhaseContext:
    alpha: float
    gamma: float
    beta: float

    @property
    def b(self) -> float:
        return 2 * self.alpha / (1 - self.alpha)

    @classmethod
    def for_left(cls, alpha) -> "PhaseContext":
        alpha = _check_alpha(alpha)
        return cls(alpha, 0.0, (1 + alpha) / (1 - alpha))

    @classmethod
    def for_right(cls, alpha) -> "PhaseContext":
        alpha = _check_alpha(alpha)
        return cls(alpha, 1.0, 2 * alpha / (1 - alpha))


def _check_alpha(alpha) -> float:
    alpha = float(alpha)
    if not -1 < alpha < 1:
        raise DomainError(f"alpha={alpha} outside (-1, 1)")
    return alpha


def _check_regular(z: complex):
    for s in (0, 1, -1):
        if abs(z - s) < 1e-300:
            raise DomainError(f"h is singular at z={s}")


def h_eval(z: complex, ctx: PhaseContext, order: int = 0, branch: str = "principal",
           normalized: bool = False) -> complex:
    """h or one of its first four derivatives at ``z``.

    ``branch="principal"`` takes ln(z^2-1) as ln(z-1) + ln(z+1), with cuts on
    (-inf, 1]. ``branch="disk"`` uses ln(1-z) + ln(1+z) + i pi, which is
    analytic inside the unit disk minus the cut of ln z. ``normalized``
    subtracts (b/2) ln 2, which puts both oscillatory saddles on Re h = 0.
    """
    z = complex(z)
    _check_regular(z)
    b = ctx.b
    if order == 0:
        if branch == "principal":
            quad = cmath.log(z - 1) + cmath.log(z + 1)
        elif branch == "disk":
            quad = cmath.log(1 - z) + cmath.log(1 + z) + 1j * math.pi
        else:
            raise DomainError(f"unknown branch {branch!r}")
        val = quad - _LN2 - cmath.log(z) + b * cmath.log(1 + z)
        return val - b * _LN2 / 2 if normalized else val
    q = z * z - 1
    if order == 1:
        return 2 * z / q - 1 / z + b / (1 + z)
    if order == 2:
        return -2 * (z * z + 1) / q**2 + 1 / z**2 - b / (1 + z) ** 2
    if order == 3:
        return 4 * z * (z * z + 3) / q**3 - 2 / z**3 + 2 * b / (1 + z) ** 3
    if order == 4:
        return -12 * (z**4 + 6 * z * z + 1) / q**4 + 6 / z**4 - 6 * b / (1 + z) ** 4
    raise DomainError("order must be 0..4")


def g_eval(z: complex, ctx: PhaseContext, order: int = 0) -> complex:
    """(1+z)^beta (1-z)^gamma / (2 pi i z) or its first or second derivative."""
    z = complex(z)
    if abs(z) < 1e-300:
        raise DomainError("g is singular at z=0")
    if order not in (0, 1, 2):
        raise DomainError("order must be 0..2")
    one_minus = (1 - z) ** ctx.gamma if ctx.gamma else 1.0
    g = (1 + z) ** ctx.beta * one_minus / (2j * math.pi * z)
    if order == 0:
        return g
    if abs(1 - z) < 1e-300:
        raise DomainError("log-derivative of g is singular at z=1")
    l1 = ctx.beta / (1 + z) - ctx.gamma / (1 - z) - 1 / z
    if order == 1:
        return g * l1
    dl1 = -ctx.beta / (1 + z) ** 2 - ctx.gamma / (1 - z) ** 2 + 1 / z**2
    return g * (l1 * l1 + dl1)


@dataclass(frozen=True)
class SaddleData:
    alpha: float
    zeta_plus: complex
    zeta_minus: complex
    h_plus: tuple
    h_minus: tuple

    @property
    def coalescent(self) -> bool:
        return self.zeta_plus == self.zeta_minus

    def residual(self) -> float:
        """Largest saddle-equation residual, relative to the size of its terms."""
        a = self.alpha
        return max(abs((1 + a) * z * z - 2 * a * z + (1 - a))
                   / max(1.0, abs((1 + a) * z * z), abs(2 * a * z))
                   for z in (self.zeta_plus, self.zeta_minus))


def saddle_roots(alpha) -> tuple[complex, complex]:
    """Roots of (1+a) z^2 - 2 a z + (1-a) = 0, labeled (zeta_plus, zeta_minus).

    zeta_plus is the upper-half-plane root, or the larger real one.
    """
    a = _check_alpha(alpha)
    disc = 2 * a * a - 1
    if abs(disc) < 1e-14:
        disc = 0.0
    if disc < 0:
        w = math.sqrt(-disc)
        return complex(a, w) / (1 + a), complex(a, -w) / (1 + a)
    if disc == 0:
        z = complex(a / (1 + a))
        return z, z
    w = math.sqrt(disc)
    # the root without cancellation first, the other from the product of roots
    big = (a + math.copysign(w, a)) / (1 + a)
    small = (1 - a) / ((1 + a) * big)
    return complex(max(big, small)), complex(min(big, small))


def saddle_points(alpha) -> SaddleData:
    zp, zm = saddle_roots(alpha)
    ctx = PhaseContext.for_left(alpha)

    def derivs(z):
        return tuple(h_eval(z, ctx, k) for k in range(4))

    return SaddleData(float(alpha), zp, zm, derivs(zp), derivs(zm))


# -- contour tracing ---------------------------------------------------------

class _ContinuousPhase:
    """h with every log term unwrapped along a path, so Im h stays continuous."""

    def __init__(self, ctx: PhaseContext, z0: complex):
        self.ctx = ctx
        self.coefs = (1.0, 1.0, -1.0, ctx.b)
        self.last = self._raw(z0)

    @staticmethod
    def _raw(z):
        return [cmath.log(z - 1).imag, cmath.log(z + 1).imag, cmath.log(z).imag, cmath.log(1 + z).imag]

    def _re(self, z):
        return (math.log(abs(z - 1)) + math.log(abs(z + 1)) - _LN2 - math.log(abs(z))
                + self.ctx.b * math.log(abs(1 + z)))

    def peek(self, z) -> complex:
        ims = [r + 2 * math.pi * round((p - r) / (2 * math.pi)) for r, p in zip(self._raw(z), self.last)]
        return complex(self._re(z), sum(c * v for c, v in zip(self.coefs, ims))), ims

    def accept(self, ims):
        self.last = ims


@dataclass
class Contour:
    alpha: float
    saddle: complex
    points: list = field(default_factory=list)
    h_values: list = field(default_factory=list)
    ascent: bool = False
    truncated: bool = False
    reason: str = ""

    def im_drift(self) -> float:
        target = self.h_values[0].imag
        return max(abs(h.imag - target) for h in self.h_values)

    def re_h_monotone(self) -> bool:
        re = [h.real for h in self.h_values]
        pairs = zip(re, re[1:])
        return all(b >= a for a, b in pairs) if self.ascent else all(b <= a for a, b in pairs)


def _initial_directions(h2: complex, h3: complex, ascent: bool) -> list[complex]:
    if abs(h2) > 1e-8:
        d = (1j if not ascent else 1) / cmath.sqrt(h2)
        d /= abs(d)
        return [d, -d]
    # coalescent saddle: h3 (z-s)^3 real negative (descent) or positive (ascent)
    target = math.pi if not ascent else 0.0
    base = (target - cmath.phase(h3)) / 3
    return [cmath.exp(1j * (base + 2 * math.pi * k / 3)) for k in range(3)]


def descent_contour(alpha, which: int = 0, saddle: str = "plus", max_points: int | None = None,
                    ascent: bool = False, step: float | None = None, max_drop: float | None = None,
                    config=DEFAULT) -> Contour:
    """Trace the level set Im h = Im h(saddle) away from a saddle.

    ``which`` picks one of the two leaving directions (three at coalescence).
    Re h decreases along the path (increases if ``ascent``). Tracing stops when
    Re h has moved by ``max_drop``, after ``max_points`` points, or when the
    step underflows near a singularity, which sets ``truncated``.
    """
    max_points = max_points or config.contour_max_points
    step0 = step or config.contour_step
    max_drop = max_drop or config.contour_max_drop
    data = saddle_points(alpha)
    s = data.zeta_plus if saddle == "plus" else data.zeta_minus
    other = data.zeta_minus if saddle == "plus" else data.zeta_plus
    h2, h3 = (data.h_plus if saddle == "plus" else data.h_minus)[2:]
    dirs = _initial_directions(h2, h3, ascent)
    d = dirs[which % len(dirs)]
    ctx = PhaseContext.for_left(alpha)
    phase = _ContinuousPhase(ctx, s)
    h0, ims = phase.peek(s)
    target = h0.imag
    out = Contour(float(alpha), s, [s], [h0], ascent)
    sign = 1.0 if ascent else -1.0

    z = s + step0 * d
    h, ims = phase.peek(z)
    z, h, ims = _correct(z, target, phase, ctx)
    phase.accept(ims)
    out.points.append(z)
    out.h_values.append(h)
    h_step = step0
    while len(out.points) < max_points:
        if abs(h.real - h0.real) >= max_drop:
            out.reason = "drop"
            return out
        dist = min(abs(z), abs(z - 1), abs(z + 1))
        if dist < config.contour_stop_radius:
            out.reason = "singularity"
            return out
        if z != other and abs(z - other) < 1e-4 and abs(other - s) > 1e-4:
            out.reason = "saddle"
            return out
        if abs(z) > max(config.contour_escape_radius, 2 * abs(s)):
            out.reason = "escape"
            return out
        grad = h_eval(z, ctx, 1)
        if abs(grad) == 0:
            out.truncated, out.reason = True, "stationary"
            break
        direction = sign * grad.conjugate() / abs(grad)
        h_step = min(h_step * 1.5, 0.25 * dist, 0.05)
        while True:
            if h_step < 1e-12:
                out.truncated, out.reason = True, "step underflow"
                warnings.warn("contour step underflow near a singularity", RuntimeWarning)
                return out
            trial = z + h_step * direction
            try:
                cand, hc, ims = _correct(trial, target, phase, ctx)
            except (ArithmeticError, DomainError):
                h_step /= 2
                continue
            moved = hc.real - h.real
            if abs(cand - z) < 3 * h_step and sign * moved >= 0 and abs(hc.imag - target) < 1e-10:
                break
            h_step /= 2
        phase.accept(ims)
        z, h = cand, hc
        out.points.append(z)
        out.h_values.append(h)
    if out.reason == "":
        out.truncated, out.reason = True, "max points"
    return out


def _correct(z, target, phase, ctx, iters: int = 6):
    """Newton projection of ``z`` onto Im h = target along grad Im h."""
    h, ims = phase.peek(z)
    for _ in range(iters):
        resid = h.imag - target
        if abs(resid) < 1e-13:
            break
        hp = h_eval(z, ctx, 1)
        g = 1j * hp.conjugate()
        z = z - resid * g / (abs(hp) ** 2)
        h, ims = phase.peek(z)
    if abs(h.imag - target) > 1e-10:
        raise ArithmeticError("corrector did not converge")
    return z, h, ims


def contour_family(alpha, ascent: bool = True, **kw) -> list[Contour]:
    """All descent (and optionally ascent) curves leaving both saddles."""
    data = saddle_points(alpha)
    saddles = ["plus"] if data.coalescent or abs(data.zeta_plus - data.zeta_minus) < 1e-12 else ["plus", "minus"]
    out = []
    for sd in saddles:
        for asc in ([False, True] if ascent else [False]):
            count = 3 if abs((data.h_plus if sd == "plus" else data.h_minus)[2]) <= 1e-8 else 2
            for k in range(count):
                out.append(descent_contour(alpha, k, sd, ascent=asc, **kw))
    return out


def contour_to_csv(contours) -> str:
    """CSV ``re,im,re_h,im_h``; separate curves are split by a blank line."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["re", "im", "re_h", "im_h"])
    for i, c in enumerate(contours):
        if i:
            buf.write("\n")
        for z, h in zip(c.points, c.h_values):
            w.writerow([f"{z.real:.17g}", f"{z.imag:.17g}", f"{h.real:.17g}", f"{h.imag:.17g}"])
    return buf.getvalue()
