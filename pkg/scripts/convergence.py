"""Error of each large-t estimate against exact amplitudes as t grows.

Prints CSV: method, alpha, t, n, absolute spinor error, relative error, and the
error rescaled by the expected rate (t^1.5 for the oscillatory form, t^2.5 with
the correction, t for the exponential ratio, m^(1/3) for the Airy form).
"""
import argparse
import math
from dataclasses import dataclass

from hadamard_walk.asymptotics import osc_correction, psi_airy, psi_exponential, psi_oscillatory
from hadamard_walk.exact import evolve
from hadamard_walk.saddle import ALPHA_C


@dataclass
class Settings:
    ts: tuple = (100, 200, 400, 800)
    alpha_osc: float = 0.5
    alpha_exp: float = 0.8


def _site(alpha, t):
    n = round(alpha * t)
    return n if (n - t) % 2 == 0 else n - 1


def run(cfg: Settings):
    cases = [
        ("oscillatory", cfg.alpha_osc, psi_oscillatory, lambda t, err, rel: err * t**1.5),
        ("correction", cfg.alpha_osc, osc_correction, lambda t, err, rel: err * t**2.5),
        ("exponential", cfg.alpha_exp, psi_exponential, lambda t, err, rel: rel * t),
        ("airy", ALPHA_C, psi_airy, lambda t, err, rel: rel * ((1 - ALPHA_C) * t / 2) ** (1 / 3)),
    ]
    rows = []
    for t in cfg.ts:
        state = evolve(t)
        for name, alpha, fn, scale in cases:
            n = _site(alpha, t)
            exact = state.as_float(n)
            est = fn(n, t).as_tuple()
            err = math.hypot(est[0] - exact[0], est[1] - exact[1])
            rel = err / math.hypot(*exact)
            rows.append((name, alpha, t, n, err, rel, scale(t, err, rel)))
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ts", type=lambda s: tuple(int(x) for x in s.split(",")), default=Settings.ts)
    args = ap.parse_args(argv)
    print("method,alpha,t,n,abs_err,rel_err,scaled")
    for name, alpha, t, n, err, rel, sc in sorted(run(Settings(ts=args.ts)), key=lambda r: (r[0], r[2])):
        print(f"{name},{alpha:.6f},{t},{n},{err:.6e},{rel:.6e},{sc:.6g}")


if __name__ == "__main__":
    main()
