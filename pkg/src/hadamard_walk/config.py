"""Tunable constants and the key=value config-file loader."""
from dataclasses import dataclass, fields, replace
from pathlib import Path


@dataclass(frozen=True)
class Config:
    # transitional half-width is w0 * t**(-2/3) around |alpha| = 1/sqrt(2)
    w0: float = 2.0
    # |alpha - 1/sqrt(2)| window where the Airy evaluator accepts sites
    airy_band: float = 0.2
    quad_tol: float = 1e-12
    quad_min_nodes: int = 64
    quad_nodes_per_step: int = 8
    quad_max_nodes: int = 1 << 20
    max_exact_t: int = 10_000
    contour_step: float = 1e-3
    contour_max_points: int = 2000
    contour_max_drop: float = 30.0
    contour_stop_radius: float = 1e-6
    contour_escape_radius: float = 4.0
    airy_x_max: float = 1e6


DEFAULT = Config()


def _coerce(value: str, kind):
    if kind is int or kind == "int":
        return int(float(value)) if "e" in value.lower() else int(value)
    return float(value)


def load_config(path) -> Config:
    """Read ``key = value`` lines; ``#`` starts a comment. Unknown keys raise."""
    known = {f.name: f.type for f in fields(Config)}
    updates = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in known:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
        updates[key] = _coerce(value, known[key])
    return replace(DEFAULT, **updates)
