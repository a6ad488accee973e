#!/usr/bin/env python3
"""Regenerate the f(a) tables behind the embedded-mode existence story.

For three stratification strengths (alpha = 0.5, 0.91, 0.97 at b = k = 1,
unit circle) this tabulates the circle obstruction profile f(a) on a grid,
marks where it changes sign, and prints the special submergence a* when
one exists.  The same table is available from the CLI as

    trapmodes sweep --what f --sweep a:0.01:0.99:50 --out tables

This script exists so the tables can be regenerated without remembering
the CLI incantation, and so the root locations are printed next to the
grid instead of hiding in a separate run.  Writes submergence_tables.csv
next to wherever you run it from (override with --out).
"""

import argparse
import csv
import sys

from trapmodes import (
    FluidConfig,
    ProblemSetup,
    a_star,
    analytic_dipoles,
    spectral_context,
    sweep_f,
)

ALPHAS = (0.5, 0.91, 0.97)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=40,
                    help="grid points per alpha (default 40)")
    ap.add_argument("--out", default="submergence_tables.csv")
    args = ap.parse_args(argv)

    cfgs = [FluidConfig(beta=1.0 - al, b=1.0, k=1.0) for al in ALPHAS]
    # end the grid close to a = 1 so the near-endpoint sign change of the
    # alpha = 0.91 family is actually bracketed by the sampled points
    lo, hi = 0.01, 0.998
    grid = [lo + (hi - lo) * i / (args.points - 1) for i in range(args.points)]
    rows = sweep_f(cfgs, grid)

    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["alpha", "tau0", "a", "f", "has_root", "a_star"])
        for r in rows:
            w.writerow([
                format(r["alpha"], ".12g"), format(r["tau0"], ".12g"),
                format(r["a"], ".12g"), format(r["f"], ".12g"),
                "true" if r["has_root"] else "false",
                "" if r["a_star"] is None else format(r["a_star"], ".12g"),
            ])
    print(f"wrote {len(rows)} rows to {args.out}")

    dip = analytic_dipoles("circle", r=1.0)
    for al, cfg in zip(ALPHAS, cfgs):
        ctx = spectral_context(cfg)
        setup = ProblemSetup(cfg=cfg, side="U", a=0.5 * cfg.b,
                             epsilon=0.01, dip=dip)
        res = a_star(setup, ctx)
        if res.exists:
            print(f"alpha={al}: tau0={res.tau0:.6f}  a* = {res.a_star:.6f}"
                  f"  (root of f inside (0, b))")
        else:
            print(f"alpha={al}: tau0={res.tau0:.6f}  no admissible root;"
                  f" {res.diagnostics}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
