"""Tabulate 1D q-Gaussian curves (sigma = 0.5 by default) for plotting."""
import argparse

import numpy as np

from qdog.cli import write_csv
from qdog.qmath import QParams, qgauss_1d

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sigma", type=float, default=0.5)
    ap.add_argument("--grid", default="-1,0,0.5,1,1.5,2,2.5")
    ap.add_argument("--out", default="qgauss_profiles.csv")
    args = ap.parse_args()

    qs = [float(v) for v in args.grid.split(",")]
    x = np.linspace(-4 * args.sigma, 4 * args.sigma, 801)
    cols = [np.asarray(qgauss_1d(x, QParams(q, args.sigma))) for q in qs]
    write_csv(args.out, ["x"] + [f"q={q:g}" for q in qs], zip(x, *cols))
    print(f"wrote {args.out}")
