"""Jacobi polynomials at zero and the closed-form walk amplitudes built from them."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exact import ExactAmplitude


def _pochhammer(x: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= x + i
    return out


def hyp2f1_terminating(a: int, b, c, z) -> Fraction:
    """Exact 2F1(a, b; c; z) for a nonpositive integer ``a``."""
    if int(a) != a or a > 0:
        raise DomainError("2F1 terminates only for nonpositive integer a")
    j = -int(a)
    b, c, z = Fraction(b), Fraction(c), Fraction(z)
    if c.denominator == 1 and c <= 0 and -c < j:
        raise DomainError("c hits a pole inside the summation range")
    total = Fraction(0)
    term = Fraction(1)
    for k in range(j + 1):
        total += term
        term = term * (a + k) * (b + k) / ((c + k) * (k + 1)) * z
    return total


@dataclass(frozen=True)
class JacobiParams:
    j: int
    u: Fraction
    v: Fraction

    def __post_init__(self):
        if self.j < -1:
            raise DomainError("degree must be >= -1")
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "v", Fraction(self.v))


def jacobi_at_zero(p: JacobiParams) -> Fraction:
    """J_j^(u,v)(0); degree -1 is the zero polynomial."""
    if p.j == -1:
        return Fraction(0)
    scale = _pochhammer(p.u + 1, p.j) / _pochhammer(Fraction(1), p.j)
    return scale * hyp2f1_terminating(-p.j, p.u + 1 + p.v + p.j, p.u + 1, Fraction(1, 2))


def jacobi_recurrence(j: int, u, v, x) -> Fraction:
    """J_j^(u,v)(x) by the three-term recurrence in the degree."""
    u, v, x = Fraction(u), Fraction(v), Fraction(x)
    if j < 0:
        return Fraction(0)
    prev = Fraction(1)
    if j == 0:
        return prev
    cur = (u - v) / 2 + (u + v + 2) * x / 2
    for k in range(2, j + 1):
        s = 2 * k + u + v
        a1 = 2 * k * (k + u + v) * (s - 2)
        a2 = (s - 1) * (u * u - v * v)
        a3 = (s - 2) * (s - 1) * s
        a4 = 2 * (k + u - 1) * (k + v - 1) * s
        prev, cur = cur, ((a2 + a3 * x) * cur - a4 * prev) / a1
    return cur


@dataclass(frozen=True)
class ClosedFormAmplitude:
    value: ExactAmplitude
    phase_applied: bool = True

    def __float__(self):
        return float(self.value)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _check_site(n: int, t: int):
    if (t - n) % 2:
        raise DomainError(f"parity violation: n={n}, t={t}")
    if not -t <= n < t:
        raise DomainError(f"closed form needs -t <= n < t, got n={n}, t={t}")


def closed_form_raw(n: int, t: int) -> tuple[ExactAmplitude, ExactAmplitude]:
    """The Jacobi expressions before the external (-1)^((t-n)/2) phase."""
    _check_site(n, t)
    if n >= 0:
        j = (t - n) // 2 - 1
        right_q = -Fraction(t + n, t - n) * jacobi_at_zero(JacobiParams(j, 1, n))
        right = ExactAmplitude.from_surd(right_q, -n - 2, t)
        left_q = _sign(n + 1) * jacobi_at_zero(JacobiParams(j, 0, n + 1))
        left = ExactAmplitude.from_surd(left_q, -n - 2, t)
    else:
        right_q = -jacobi_at_zero(JacobiParams((t + n) // 2 - 1, 1, -n))
        right = ExactAmplitude.from_surd(right_q, n - 2, t)
        left_q = _sign(n + 1) * jacobi_at_zero(JacobiParams((t + n) // 2, 0, -n - 1))
        left = ExactAmplitude.from_surd(left_q, n, t)
    return left, right


def psi_closed_form(n: int, t: int) -> tuple[ClosedFormAmplitude, ClosedFormAmplitude]:
    """(psi_L, psi_R) from the Jacobi closed forms with the external phase applied.

    These agree with the flip-then-move engine up to sign:
    psi_R matches exactly and psi_L carries an extra (-1)^t.
    """
    left, right = closed_form_raw(n, t)
    if (t - n) // 2 % 2:
        left, right = -left, -right
    return ClosedFormAmplitude(left), ClosedFormAmplitude(right)


def closed_form_engine(n: int, t: int) -> tuple[ExactAmplitude, ExactAmplitude]:
    """Closed form with signs aligned to the flip-then-move engine."""
    left, right = psi_closed_form(n, t)
    lv = left.value if t % 2 == 0 else -left.value
    return lv, right.value
