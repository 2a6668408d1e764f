"""Momentum-space picture: the coin eigensystem and Fourier inversion of the walk."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .asymptotics import SpinorEstimate
from .config import DEFAULT
from .errors import AccuracyError, DomainError
from .saddle import PhaseContext, h_eval, saddle_roots

SQRT2 = math.sqrt(2)


@dataclass(frozen=True)
class Dispersion:
    k: float
    omega: float

    @classmethod
    def at(cls, k: float) -> "Dispersion":
        return cls(k, math.asin(math.sin(k) / SQRT2))


def coin_matrix(k: float) -> np.ndarray:
    e = cmath.exp(1j * k)
    return np.array([[-1 / e, 1 / e], [e, e]]) / SQRT2


def coin_eigs(k: float) -> tuple[complex, complex]:
    """Eigenvalues e^(i w) and e^(i (pi - w)) of the momentum-space step."""
    w = Dispersion.at(k).omega
    return cmath.exp(1j * w), cmath.exp(1j * (math.pi - w))


@dataclass(frozen=True)
class QuadratureSpec:
    nodes: int | None = None
    tol: float = DEFAULT.quad_tol
    max_nodes: int = DEFAULT.quad_max_nodes

    def start(self, n: int, t: int, config=DEFAULT) -> int:
        want = self.nodes or max(config.quad_min_nodes, config.quad_nodes_per_step * max(t, abs(n)))
        want = max(want, config.quad_min_nodes)
        return 1 << (want - 1).bit_length()


@dataclass(frozen=True)
class FourierResult:
    estimate: SpinorEstimate
    delta: float
    nodes: int


def _integrals(n: int, t: int, nodes: int, form: str) -> tuple[complex, complex]:
    k = -math.pi + 2 * math.pi * np.arange(nodes) / nodes
    w = np.arcsin(np.sin(k) / SQRT2)
    root = np.sqrt(1 + np.cos(k) ** 2)
    if form == "momentum":
        wave = np.exp(-1j * (w * t - k * n))
        left = 1j * np.mean(-1j * np.exp(1j * k) / root * wave)
        right = np.mean((1 + np.cos(k) / root) * wave)
    elif form == "reflected":
        # phase e^(-i(wt + kn)) with swapped chirality labels, read at site -n
        wave = np.exp(-1j * (w * t + k * (-n)))
        left = np.mean(np.exp(1j * k) / root * wave)
        right = np.mean((1 + np.cos(k) / root) * wave)
    else:
        raise DomainError(f"unknown Fourier form {form!r}")
    return left, right


def psi_fourier(n: int, t: int, q: QuadratureSpec | None = None, form: str = "momentum",
                config=DEFAULT) -> FourierResult:
    """Amplitudes by trapezoid quadrature of the inversion integrals.

    The single-branch integrals are multiplied by the parity factor
    (1 + (-1)^(n+t))/2, which zeroes the sites the walk never reaches.
    Nodes double until successive results differ by at most ``q.tol``.
    """
    if t < 0:
        raise DomainError("t must be nonnegative")
    q = q or QuadratureSpec(tol=config.quad_tol, max_nodes=config.quad_max_nodes)
    if (n + t) % 2:
        return FourierResult(SpinorEstimate(0.0, 0.0, "fourier", math.inf, n, t), 0.0, 0)
    nodes = q.start(n, t, config)
    prev = _integrals(n, t, nodes, form)
    delta = math.inf
    while True:
        if 2 * nodes > q.max_nodes:
            raise AccuracyError(f"no convergence within {q.max_nodes} nodes", last_delta=delta)
        nodes *= 2
        cur = _integrals(n, t, nodes, form)
        delta = max(abs(a - b) for a, b in zip(cur, prev))
        if delta <= q.tol:
            break
        prev = cur
    left, right = cur
    est = SpinorEstimate(float(left.real), float(right.real), "fourier", math.inf, n, t)
    return FourierResult(est, delta, nodes)


def psi_fourier_raw(n: int, t: int, nodes: int, form: str = "momentum") -> tuple[complex, complex]:
    """The bare integrals at a fixed node count, no parity factor."""
    return _integrals(n, t, nodes, form)


@dataclass(frozen=True)
class StationaryPoints:
    alpha: float
    real: tuple
    complex_k: tuple


def stationary_k(alpha) -> StationaryPoints:
    """Solutions of cos k = -a / sqrt(1 - a^2) in [-pi, pi]."""
    a = float(alpha)
    if not -1 < a < 1:
        raise DomainError("alpha must lie in (-1, 1)")
    c = -a / math.sqrt(1 - a * a)
    if abs(c) <= 1 + 1e-15:
        k = math.acos(max(-1.0, min(1.0, c)))
        if k in (0.0, math.pi):
            return StationaryPoints(a, (k,), ())
        return StationaryPoints(a, (k, -k), ())
    k = cmath.acos(c)
    return StationaryPoints(a, (), (k, -k))


def stationary_to_saddle(k: complex, alpha) -> complex:
    """Image of a stationary momentum in the saddle plane: z = -|zeta+| e^(-ik)."""
    a = float(alpha)
    return -math.sqrt((1 - a) / (1 + a)) * cmath.exp(-1j * k)


def group_velocity(k: float) -> float:
    """d omega / dk."""
    return math.cos(k) / (SQRT2 * math.sqrt(1 - math.sin(k) ** 2 / 2))


def saddle_phase_per_step(alpha) -> float:
    """(1 - a)/2 (Im h(zeta+) + pi) with the normalized principal h."""
    a = float(alpha)
    zp, _ = saddle_roots(a)
    return (1 - a) / 2 * (h_eval(zp, PhaseContext.for_left(a), normalized=True).imag + math.pi)


def eigen_phase(alpha) -> float:
    """pi - omega(k_a) - a k_a at the positive stationary momentum."""
    a = float(alpha)
    pts = stationary_k(a)
    if not pts.real:
        raise DomainError("no real stationary momentum for |alpha| > 1/sqrt2")
    k = max(pts.real)
    return math.pi - Dispersion.at(k).omega - a * k
