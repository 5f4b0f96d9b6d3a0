"""q sweep of the DoG detector, one edge map per q.

    python scripts/fig8_sweep.py --out runs/fig8
    python scripts/fig8_sweep.py --in photo.pgm --radius 6 --out runs/fig8_r6
"""
import argparse
import csv
import time
from pathlib import Path

from qdog import cli

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--in", dest="input", default=None, help="defaults to the bundled 512x512 scene")
    ap.add_argument("--out", default="runs/fig8")
    ap.add_argument("--sigma1", type=float, default=0.2)
    ap.add_argument("--sigma2", type=float, default=0.1)
    ap.add_argument("--radius", type=int, default=None)
    args = ap.parse_args()

    argv = ["sweep", "--out", args.out, "--sigma1", str(args.sigma1), "--sigma2", str(args.sigma2)]
    if args.input:
        argv += ["--in", args.input]
    if args.radius:
        argv += ["--radius", str(args.radius)]
    t0 = time.perf_counter()
    code = cli.main(argv)
    print(f"elapsed {time.perf_counter() - t0:.2f}s")
    if code == 0:
        for row in csv.DictReader(open(Path(args.out) / "manifest.csv")):
            print(f"q={float(row['q']):+7.3f}  radius={row['radius']:>3}  edges={row['edge_pixels']}")
    raise SystemExit(code)
