"""Lossless evolution of the Hadamard walk and the signed-binomial path sums.

Amplitudes at time t are m / sqrt(2)**t with integer m, so a whole state is a
map from site to a pair of Python ints. Everything here is exact; the only
floating path is :func:`evolve_float`, meant for t beyond the integer budget.
"""
from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np

from .config import DEFAULT
from .errors import DomainError, ResourceError


class StepOrder(enum.Enum):
    FLIP_THEN_MOVE = "flip"
    MOVE_THEN_FLIP = "move"


@dataclass(frozen=True)
class ExactAmplitude:
    """The number ``numerator / 2**(halfpow/2)``."""

    numerator: int
    halfpow: int

    def __post_init__(self):
        if self.halfpow < 0:
            raise DomainError("halfpow must be nonnegative")

    @classmethod
    def from_surd(cls, q: Fraction, e: int, halfpow: int) -> "ExactAmplitude":
        """Convert ``q * 2**(e/2)`` to denominator ``2**(halfpow/2)``."""
        k = e + halfpow
        if k % 2:
            raise DomainError("exponent parity does not match halfpow")
        v = Fraction(q) * (Fraction(2) ** (k // 2))
        if v.denominator != 1:
            raise DomainError(f"{q}*2^({e}/2) is not representable at halfpow={halfpow}")
        return cls(int(v), halfpow)

    def canonical(self) -> tuple[Fraction, int]:
        """(q, r) with value q / sqrt(2)**r and r in {0, 1}; unique per value."""
        if self.numerator == 0:
            return Fraction(0), 0
        return Fraction(self.numerator, 1 << (self.halfpow // 2)), self.halfpow % 2

    def square(self) -> Fraction:
        return Fraction(self.numerator * self.numerator, 1 << self.halfpow)

    def __neg__(self):
        return ExactAmplitude(-self.numerator, self.halfpow)

    def __abs__(self):
        return ExactAmplitude(abs(self.numerator), self.halfpow)

    def __eq__(self, other):
        if not isinstance(other, ExactAmplitude):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __float__(self):
        v = self.numerator / (1 << (self.halfpow // 2))
        return v / math.sqrt(2) if self.halfpow % 2 else v


@dataclass(frozen=True)
class WalkState:
    """Exact state at step ``t``: site -> (psi_L numerator, psi_R numerator).

    Both numerators share the scale ``2**(t/2)``. Sites with zero amplitude
    in both components are omitted.
    """

    t: int
    numerators: Mapping[int, tuple[int, int]]
    convention: StepOrder = StepOrder.FLIP_THEN_MOVE

    def amplitude(self, n: int) -> tuple[ExactAmplitude, ExactAmplitude]:
        left, right = self.numerators.get(n, (0, 0))
        return ExactAmplitude(left, self.t), ExactAmplitude(right, self.t)

    def sites(self) -> list[int]:
        return sorted(self.numerators)

    def norm_numerator(self) -> int:
        """Sum of squared numerators; equals 2**t for a normalized state."""
        return sum(a * a + b * b for a, b in self.numerators.values())

    def as_float(self, n: int) -> tuple[float, float]:
        a, b = self.amplitude(n)
        return float(a), float(b)

    def dense(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Sites -t..t and float amplitude arrays (zeros where absent)."""
        sites = np.arange(-self.t, self.t + 1)
        left = np.zeros(sites.size)
        right = np.zeros(sites.size)
        for n in self.numerators:
            left[n + self.t], right[n + self.t] = self.as_float(n)
        return sites, left, right


INITIAL = {0: (0, 1)}


def _check_budget(t: int, budget: int | None):
    budget = DEFAULT.max_exact_t if budget is None else budget
    if t > budget:
        raise ResourceError(f"t={t} exceeds the exact-arithmetic budget {budget}")


def step(state: WalkState, budget: int | None = None) -> WalkState:
    """One exact step under ``state.convention``."""
    _check_budget(state.t + 1, budget)
    new: dict[int, list[int]] = {}
    if state.convention is StepOrder.FLIP_THEN_MOVE:
        # coin: R -> (R+L)/sqrt2, L -> (R-L)/sqrt2, then L moves to n-1, R to n+1
        for n, (left, right) in state.numerators.items():
            new.setdefault(n - 1, [0, 0])[0] += right - left
            new.setdefault(n + 1, [0, 0])[1] += right + left
    else:
        # psi_L(n) <- -psi_L(n+1) + psi_R(n-1);  psi_R(n) <- psi_L(n+1) + psi_R(n-1)
        for n, (left, right) in state.numerators.items():
            if left:
                cell = new.setdefault(n - 1, [0, 0])
                cell[0] -= left
                cell[1] += left
            if right:
                cell = new.setdefault(n + 1, [0, 0])
                cell[0] += right
                cell[1] += right
    numerators = {n: (a, b) for n, (a, b) in new.items() if a or b}
    return WalkState(state.t + 1, numerators, state.convention)


def evolve(t: int, convention: StepOrder = StepOrder.FLIP_THEN_MOVE,
           budget: int | None = None) -> WalkState:
    """Exact state after ``t`` steps from site 0 with coin |R>."""
    if t < 0:
        raise DomainError("t must be nonnegative")
    _check_budget(t, budget)
    state = WalkState(0, dict(INITIAL), convention)
    for _ in range(t):
        state = step(state, budget)
    return state


def evolve_float(t: int, convention: StepOrder = StepOrder.FLIP_THEN_MOVE):
    """Double-precision evolution; returns (sites, psi_L, psi_R) dense arrays."""
    if t < 0:
        raise DomainError("t must be nonnegative")
    size = 2 * t + 3
    left = np.zeros(size)
    right = np.zeros(size)
    right[t + 1] = 1.0
    s = 1 / math.sqrt(2)
    for _ in range(t):
        if convention is StepOrder.FLIP_THEN_MOVE:
            new_left = np.roll((right - left) * s, -1)
            new_right = np.roll((right + left) * s, 1)
        else:
            from_left = np.roll(left, -1)
            from_right = np.roll(right, 1)
            new_left = (from_right - from_left) * s
            new_right = (from_right + from_left) * s
        left, right = new_left, new_right
    sites = np.arange(-t - 1, t + 2)
    return sites[1:-1], left[1:-1], right[1:-1]


def float_total_probability(t: int, convention: StepOrder = StepOrder.FLIP_THEN_MOVE) -> float:
    _, left, right = evolve_float(t, convention)
    return math.fsum(left * left) + math.fsum(right * right)


def probability(state: WalkState) -> dict[int, Fraction]:
    """Exact p(n, t) = psi_L^2 + psi_R^2 per occupied site."""
    scale = 1 << state.t
    return {n: Fraction(a * a + b * b, scale) for n, (a, b) in sorted(state.numerators.items())}


def _binom(a: int, b: int) -> int:
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class PathSum:
    psi_L: ExactAmplitude
    psi_R: ExactAmplitude
    endpoint: bool


def path_sum_amplitude(n: int, t: int) -> PathSum:
    """Signed binomial path sums for the amplitudes at (n, t).

    With l = (t - n)/2::

        psi_R = 2^(-t/2) sum_s C(l-1, s-1) C(t-l, s) (-1)^(t-s)
        psi_L = 2^(-t/2) sum_s C(l-1, s)   C(t-l, s) (-1)^(t-s-1)

    The sums are exact. They differ from the flip-then-move engine by the
    sign (-1)^((t+n)/2) (see :func:`path_sum_engine_sign`). At n = t they do
    not give the endpoint amplitude, so |n| = t results carry ``endpoint``.
    """
    if t < 0 or abs(n) > t:
        raise DomainError(f"site {n} outside [-{t}, {t}]")
    if (t - n) % 2:
        raise DomainError(f"parity violation: n={n}, t={t}")
    l = (t - n) // 2
    right = 0
    left = 0
    for s in range(t - l + 1):
        sign = 1 if (t - s) % 2 == 0 else -1
        c = _binom(t - l, s)
        right += _binom(l - 1, s - 1) * c * sign
        left -= _binom(l - 1, s) * c * sign
    return PathSum(ExactAmplitude(left, t), ExactAmplitude(right, t), abs(n) == t)


def path_sum_engine_sign(n: int, t: int) -> int:
    """Sign s with flip-then-move amplitude = s * path sum, for -t <= n < t."""
    return 1 if ((t + n) // 2) % 2 == 0 else -1


STATE_CSV_HEADER = ["n", "psi_L_num", "psi_R_num", "halfpow", "p_exact_num", "p_exact_den"]


def _state_rows(state: WalkState):
    scale = 1 << state.t
    for n in state.sites():
        a, b = state.numerators[n]
        p = Fraction(a * a + b * b, scale)
        yield {"n": n, "psi_L_num": a, "psi_R_num": b, "halfpow": state.t,
               "p_exact_num": p.numerator, "p_exact_den": p.denominator}


def state_to_csv(state: WalkState) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=STATE_CSV_HEADER, lineterminator="\n")
    writer.writeheader()
    writer.writerows(_state_rows(state))
    return buf.getvalue()


def state_to_json(state: WalkState) -> str:
    # numerators can exceed 2**53, so they are written as JSON integers
    doc = {"t": state.t, "convention": state.convention.value, "sites": list(_state_rows(state))}
    return json.dumps(doc, indent=1)


def state_from_json(text: str) -> WalkState:
    doc = json.loads(text)
    nums = {row["n"]: (row["psi_L_num"], row["psi_R_num"]) for row in doc["sites"]}
    return WalkState(doc["t"], nums, StepOrder(doc["convention"]))
