"""Exact probability distribution at one time step, as CSV (and optionally a plot)."""
import argparse
import sys
from dataclasses import dataclass

from hadamard_walk.exact import evolve, probability


@dataclass
class Settings:
    t: int = 100
    plot: str | None = None


def run(cfg: Settings):
    p = probability(evolve(cfg.t))
    rows = [(n, float(p[n])) for n in sorted(p)]
    if cfg.plot:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
        fig, ax = plt.subplots(figsize=(7, 3.5))
        ax.plot([n for n, _ in rows], [v for _, v in rows], lw=1)
        ax.set_xlabel("n")
        ax.set_ylabel(f"p(n), t={cfg.t}")
        fig.tight_layout()
        fig.savefig(cfg.plot, dpi=150)
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--t", type=int, default=Settings.t)
    ap.add_argument("--plot", help="write a PNG here (needs matplotlib)")
    args = ap.parse_args(argv)
    out = sys.stdout
    out.write("n,p\n")
    for n, v in run(Settings(args.t, args.plot)):
        out.write(f"{n},{v:.17g}\n")


if __name__ == "__main__":
    main()
