"""Distribution statistics and the cross-method comparison table."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .asymptotics import osc_correction, psi_airy, psi_exponential, psi_oscillatory
from .config import DEFAULT
from .errors import DomainError, RegimeError
from .exact import evolve, probability
from .jacobi import closed_form_engine
from .regimes import ALPHA_C, Regime, classify
from .spectral import QuadratureSpec, psi_fourier

METHODS = ("jacobi", "oscillatory", "correction", "exponential", "airy", "fourier", "auto")


def moment_exact(t: int, order: int) -> Fraction:
    """E[(n/t)^order] under the exact distribution at time t."""
    if t < 1:
        raise DomainError("t must be >= 1")
    if order < 1:
        raise DomainError("order must be >= 1")
    p = probability(evolve(t))
    return sum((w * Fraction(n, t) ** order for n, w in p.items()), Fraction(0))


def moments(t: int, order: int) -> float:
    return float(moment_exact(t, order))


def limiting_density(alpha: float) -> float:
    """Large-t density of n/t on the oscillatory range."""
    if abs(alpha) >= ALPHA_C:
        raise DomainError("density is defined only for |alpha| < 1/sqrt2")
    return 1 / (math.pi * (1 - alpha) * math.sqrt(1 - 2 * alpha**2))


def limiting_mass(lo: float, hi: float, nodes: int = 200) -> float:
    """Integral of the limiting density over [lo, hi].

    The substitution alpha = sin(phi)/sqrt2 removes the edge singularities,
    so plain Gauss-Legendre converges fast.
    """
    if not -ALPHA_C <= lo <= hi <= ALPHA_C:
        raise DomainError("integration range must lie in [-1/sqrt2, 1/sqrt2]")
    a, b = math.asin(lo * math.sqrt(2)), math.asin(hi * math.sqrt(2))
    x, w = np.polynomial.legendre.leggauss(nodes)
    phi = (b - a) / 2 * x + (a + b) / 2
    f = 1 / (math.pi * math.sqrt(2) * (1 - np.sin(phi) / math.sqrt(2)))
    return float((b - a) / 2 * np.dot(w, f))


def transition_width(t: int, state=None) -> float:
    """Distance in n/t from the right peak of p to the first site where p < t^-2."""
    state = state or evolve(t)
    p = probability(state)
    sites = sorted(n for n in p if n > 0)
    peak = max(sites, key=lambda n: p[n])
    floor = Fraction(1, t * t)
    for n in sites:
        if n > peak and p[n] < floor:
            return (n - peak) / t
    return (t - peak) / t


@dataclass
class ComparisonRow:
    n: int
    t: int
    alpha: float
    regime: str
    exact: tuple
    values: dict = field(default_factory=dict)

    def errors(self, method: str) -> tuple[float, float] | None:
        v = self.values.get(method)
        if v is None:
            return None
        err = math.hypot(v[0] - self.exact[0], v[1] - self.exact[1])
        scale = math.hypot(*self.exact)
        return err, (err / scale if scale else math.inf)


def _route(n: int, t: int, config=DEFAULT) -> str:
    if t - abs(n) < 4:
        return "fourier"
    kind = classify(n, t, config.w0).kind
    return {Regime.OSCILLATORY: "oscillatory", Regime.TRANSITIONAL: "airy",
            Regime.EXPONENTIAL: "exponential"}[kind]


def evaluate(method: str, n: int, t: int, config=DEFAULT, state=None) -> tuple[float, float]:
    """One method's (psi_L, psi_R) at (n, t) in the engine sign convention."""
    if method == "auto":
        method = _route(n, t, config)
    if method == "exact":
        state = state or evolve(t)
        return state.as_float(n)
    if method == "jacobi":
        if (t - n) % 2:
            return 0.0, 0.0
        left, right = closed_form_engine(n, t)
        return float(left), float(right)
    if method == "fourier":
        q = QuadratureSpec(tol=config.quad_tol, max_nodes=config.quad_max_nodes)
        return psi_fourier(n, t, q, config=config).estimate.as_tuple()
    if (t - n) % 2:
        return 0.0, 0.0
    label = classify(n, t, config.w0)
    if method in ("oscillatory", "correction"):
        if label.kind is not Regime.OSCILLATORY:
            raise RegimeError(f"site {n} is {label}, not oscillatory")
        fn = psi_oscillatory if method == "oscillatory" else osc_correction
        return fn(n, t, check=False).as_tuple()
    if method == "exponential":
        if label.kind is not Regime.EXPONENTIAL or t - abs(n) < 4:
            raise RegimeError(f"site {n} is {label}, not exponential")
        return psi_exponential(n, t, check=False).as_tuple()
    if method == "airy":
        if abs(abs(n / t) - ALPHA_C) > config.airy_band or t - abs(n) < 4:
            raise RegimeError(f"site {n} lies outside the Airy band")
        return psi_airy(n, t, check=False, band=config.airy_band).as_tuple()
    raise DomainError(f"unknown method {method!r}")


@dataclass
class ComparisonTable:
    t: int
    methods: tuple
    rows: list

    def summary(self) -> dict:
        out = {}
        for method in self.methods:
            per = {}
            for row in self.rows:
                e = row.errors(method)
                if e is None:
                    continue
                per.setdefault(row.regime, []).append(e)
            out[method] = {
                regime: {"count": len(v), "max_abs": max(a for a, _ in v),
                         "mean_abs": sum(a for a, _ in v) / len(v),
                         "max_rel": max(r for _, r in v)}
                for regime, v in sorted(per.items())
            }
        return out

    def max_abs(self, method: str) -> float:
        errs = [row.errors(method) for row in self.rows]
        return max((e[0] for e in errs if e is not None), default=0.0)

    def max_rel(self, method: str) -> float:
        errs = [row.errors(method) for row in self.rows]
        return max((e[1] for e in errs if e is not None), default=0.0)


def compare(t: int, methods, n_range: tuple[int, int] | None = None, strict: bool = False,
            config=DEFAULT) -> ComparisonTable:
    """Evaluate each method on the sites of n_range with n = t (mod 2).

    A method outside its regime leaves an empty cell, or raises with ``strict``.
    """
    methods = tuple(methods)
    for m in methods:
        if m not in METHODS:
            raise DomainError(f"unknown method {m!r}")
    lo, hi = n_range if n_range is not None else (-t, t)
    lo, hi = max(lo, -t), min(hi, t)
    state = evolve(t, budget=config.max_exact_t)
    rows = []
    for n in range(lo, hi + 1):
        if (t - n) % 2:
            continue
        row = ComparisonRow(n, t, n / t, classify(n, t, config.w0).kind.value, state.as_float(n))
        for method in methods:
            try:
                if method == "jacobi" and n == t:
                    raise RegimeError("closed form excludes the endpoint n = t")
                row.values[method] = evaluate(method, n, t, config, state)
            except RegimeError:
                if strict:
                    raise
                row.values[method] = None
        rows.append(row)
    return ComparisonTable(t, methods, rows)


def _fmt(x) -> str:
    return "" if x is None else f"{x:.17g}"


def comparison_header(methods) -> list[str]:
    head = ["n", "t", "alpha", "regime", "exact_L", "exact_R"]
    for m in methods:
        head += [f"{m}_L", f"{m}_R", f"{m}_abs", f"{m}_rel"]
    return head


def _row_cells(row: ComparisonRow, methods) -> list:
    cells = [row.n, row.t, row.alpha, row.regime, row.exact[0], row.exact[1]]
    for m in methods:
        v = row.values.get(m)
        e = row.errors(m)
        cells += [None, None, None, None] if v is None else [v[0], v[1], e[0], e[1]]
    return cells


def comparison_to_csv(table: ComparisonTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(comparison_header(table.methods))
    for row in table.rows:
        w.writerow([c if isinstance(c, (int, str)) else _fmt(c) for c in _row_cells(row, table.methods)])
    return buf.getvalue()


def comparison_to_json(table: ComparisonTable) -> str:
    head = comparison_header(table.methods)
    rows = [dict(zip(head, _row_cells(row, table.methods))) for row in table.rows]
    return json.dumps({"t": table.t, "methods": list(table.methods), "rows": rows,
                       "summary": table.summary()}, indent=1)
