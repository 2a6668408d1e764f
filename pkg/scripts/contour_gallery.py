"""Descent and ascent curves through the saddles for a few alpha, one CSV per alpha."""
import argparse
from dataclasses import dataclass, field
from pathlib import Path

from hadamard_walk.saddle import ALPHA_C, contour_family, contour_to_csv


@dataclass
class Settings:
    alphas: list = field(default_factory=lambda: [0.0, 0.5, ALPHA_C, 0.8])
    out: Path = Path("contours")
    plot: bool = False


def run(cfg: Settings):
    cfg.out.mkdir(parents=True, exist_ok=True)
    written = []
    for a in cfg.alphas:
        curves = contour_family(a)
        path = cfg.out / f"contour_{a:.4f}.csv"
        path.write_text(contour_to_csv(curves))
        written.append(path)
        drift = max(c.im_drift() for c in curves)
        ends = ", ".join(c.reason for c in curves)
        print(f"alpha={a:.4f}: {len(curves)} curves, max Im drift {drift:.1e}, ends: {ends}")
        if cfg.plot:
            _plot(curves, cfg.out / f"contour_{a:.4f}.png", a)
    return written


def _plot(curves, path, a):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    fig, ax = plt.subplots(figsize=(4, 4))
    for c in curves:
        ax.plot([z.real for z in c.points], [z.imag for z in c.points], "--" if c.ascent else "-", lw=1)
    ax.plot([-1, 0, 1], [0, 0, 0], "kx")
    ax.set_aspect("equal")
    ax.set_xlim(-2, 2)
    ax.set_ylim(-2, 2)
    ax.set_title(f"alpha = {a:.4f}")
    fig.savefig(path, dpi=150)
    plt.close(fig)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--alphas", type=lambda s: [float(x) for x in s.split(",")])
    ap.add_argument("--out", type=Path, default=Settings.out)
    ap.add_argument("--plot", action="store_true")
    args = ap.parse_args(argv)
    cfg = Settings(out=args.out, plot=args.plot)
    if args.alphas:
        cfg.alphas = args.alphas
    run(cfg)


if __name__ == "__main__":
    main()
