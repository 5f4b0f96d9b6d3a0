"""Command-line interface: detect, kernel, sweep, compare."""
from __future__ import annotations

import argparse
import math
import sys
import time
from pathlib import Path

import numpy as np

from . import imageio
from .edges import DetectParams, detect_edges
from .errors import PNMError, QDogError
from .filters import BORDERS, convolve, convolve_separable
from .kernelgen import KINDS, dog_kernel, log_kernel, sample_qgauss_kernel, support_radius
from .qmath import QParams, gaussian_2d, log_2d
from .testimage import bundled_image

EXIT_OK, EXIT_USAGE, EXIT_IO = 0, 2, 3

# the nine q values of the published sweep, kept verbatim
SWEEP_GRID = (-2.5, -1.625, -0.75, -0.125, 1.0, 1.375, 1.75, 2.125, 2.5)
PROFILE_STEP = 0.01
# relative norm below which the DoG profile is treated as identically zero
DEGENERATE_NORM = 1e-9


class UsageError(QDogError):
    pass


def fmt(v: float) -> str:
    return f"{v:.17g}"


def write_csv(path, header, rows) -> None:
    lines = [",".join(header)] if header else []
    lines += [",".join(fmt(v) for v in row) for row in rows]
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii")


def _params(args) -> DetectParams:
    return DetectParams(
        q=args.q,
        sigma1=args.sigma1,
        sigma2=args.sigma2,
        threshold=args.threshold,
        border=args.border,
        radius_override=args.radius,
    )


def _load(args):
    if args.input is None:
        return bundled_image()
    return imageio.load(args.input)


def cmd_detect(args) -> int:
    if args.input is None:
        raise UsageError("detect requires --in")
    params = _params(args)
    image = _load(args)
    edges = detect_edges(image, params)
    imageio.save(args.out, edges, binary=not args.ascii)
    print(f"{image.width}x{image.height} radius={params.radius()} edges={edges.count()}")
    return EXIT_OK


def _kernel_from_args(args):
    if args.kind == "qgauss":
        p = QParams(args.q, args.sigma)
        return sample_qgauss_kernel(p, args.radius if args.radius is not None else support_radius(p))
    if args.kind == "dog":
        params = _params(args)
        return dog_kernel(params.sigma1, params.sigma2, params.q, params.radius())
    return log_kernel(args.sigma, args.radius if args.radius is not None else support_radius(QParams(1.0, args.sigma)))


def cmd_kernel(args) -> int:
    kernel = _kernel_from_args(args)
    out = Path(args.out)
    write_csv(out, None, kernel.weights)
    offsets = np.arange(-kernel.radius, kernel.radius + 1)
    profile = out.with_name(out.stem + "_profile.csv")
    write_csv(profile, ("offset", "weight"), zip(offsets, kernel.center_row()))
    print(f"{args.kind} kernel {kernel.side}x{kernel.side} -> {out}, profile -> {profile}")
    return EXIT_OK


def sweep_filename(q: float) -> str:
    return f"edges_q{q:+.3f}.pgm"


def cmd_sweep(args) -> int:
    grid = args.grid if args.grid is not None else SWEEP_GRID
    base = _params(args)  # validates sigma1/sigma2/threshold/border once up front
    image = _load(args)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    manifest = []
    for q in grid:
        params = DetectParams(q, base.sigma1, base.sigma2, base.threshold, base.border, base.radius_override)
        edges = detect_edges(image, params)
        name = sweep_filename(q)
        imageio.save(out / name, edges, binary=not args.ascii)
        manifest.append((q, params.radius(), edges.count(), name))
    lines = ["q,radius,edge_pixels,file"] + [f"{fmt(q)},{r},{n},{name}" for q, r, n, name in manifest]
    (out / "manifest.csv").write_text("\n".join(lines) + "\n", encoding="ascii")
    print(f"{len(manifest)} edge maps -> {out}")
    return EXIT_OK


def profile_grid(sigma: float) -> np.ndarray:
    """x in [-4 sigma, 4 sigma] at 0.01 steps plus the exact LoG zeros at +-sigma*sqrt(2)."""
    n = int(math.floor(8 * sigma / PROFILE_STEP + 1e-9))
    x = -4 * sigma + PROFILE_STEP * np.arange(n + 1)
    zero = sigma * math.sqrt(2.0)
    return np.unique(np.concatenate([x, [-zero, zero]]))


def compare_profiles(sigma: float, sigma1: float, sigma2: float):
    """LoG and DoG centre-row profiles, and their normalized cross-correlation.

    Both are rows ``y = 0`` of the 2D functions, so the comparison is like for
    like. The correlation is None when the DoG profile vanishes.
    """
    x = profile_grid(sigma)
    log_p = np.asarray(log_2d(x, 0.0, sigma))
    wide = np.asarray(gaussian_2d(x, 0.0, sigma1))
    dog_p = wide - np.asarray(gaussian_2d(x, 0.0, sigma2))
    dog_norm = np.linalg.norm(dog_p)
    if dog_norm <= DEGENERATE_NORM * np.linalg.norm(wide):
        ncc = None
    else:
        ncc = float(log_p @ dog_p / (np.linalg.norm(log_p) * dog_norm))
    return x, log_p, dog_p, ncc


def time_filters(image, sigma: float, sigma1: float, sigma2: float, border: str = "replicate") -> dict:
    """Wall-clock seconds to build and apply LoG and DoG kernels of equal radius."""
    radius = support_radius(QParams(1.0, max(sigma, sigma1)))
    px = image.pixels
    convolve(px[:8, :8], log_kernel(1.0, 1))  # warm up the compiled loop outside the timings

    t0 = time.perf_counter()
    convolve(px, log_kernel(sigma, radius), border)
    t1 = time.perf_counter()
    convolve_separable(px, QParams(1.0, sigma1), radius, border).values - convolve_separable(
        px, QParams(1.0, sigma2), radius, border
    ).values
    t2 = time.perf_counter()
    convolve(px, dog_kernel(sigma1, sigma2, 1.0, radius), border)
    t3 = time.perf_counter()
    return {"radius": radius, "log_direct": t1 - t0, "dog_separable": t2 - t1, "dog_direct": t3 - t2}


def cmd_compare(args) -> int:
    sigma, s1, s2 = args.sigma, args.sigma1, args.sigma2
    for name, v in (("sigma", sigma), ("sigma1", s1), ("sigma2", s2)):
        if not (math.isfinite(v) and v > 0):
            raise UsageError(f"{name} must be a positive number, got {v}")
    if not s2 < s1:
        raise UsageError(f"sigma2 < sigma1 required, got sigma1={s1}, sigma2={s2}")
    x, log_p, dog_p, ncc = compare_profiles(sigma, s1, s2)
    write_csv(args.out, ("x", "log", "dog", "difference"), zip(x, log_p, dog_p, log_p - dog_p))
    if ncc is None:
        print("warning: DoG profile vanishes (sigma1 ~ sigma2); correlation undefined", file=sys.stderr)
        print("ncc=undefined")
    else:
        print(f"ncc={ncc:.6f}")
    t = time_filters(_load(args), sigma, s1, s2, args.border)
    dog_best = min(t["dog_separable"], t["dog_direct"])
    print(
        f"timing radius={t['radius']} log_direct={t['log_direct']:.4f}s "
        f"dog_separable={t['dog_separable']:.4f}s dog_direct={t['dog_direct']:.4f}s "
        f"dog_faster={'yes' if dog_best <= t['log_direct'] else 'no'}"
    )
    return EXIT_OK


def _grid(text: str):
    try:
        return tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad q list {text!r}") from exc


def _common() -> argparse.ArgumentParser:
    # a fresh parent per subcommand: parents share Action objects, so
    # set_defaults on one subparser would otherwise leak into the others
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=float, default=1.0)
    common.add_argument("--sigma1", type=float, default=0.2)
    common.add_argument("--sigma2", type=float, default=0.1)
    common.add_argument("--threshold", type=float, default=0.0)
    common.add_argument("--border", choices=sorted(BORDERS), default="replicate")
    common.add_argument("--radius", type=int, default=None)
    common.add_argument("--in", dest="input", default=None, help="input P2/P3/P5/P6 file")
    common.add_argument("--ascii", action="store_true", help="write P2 instead of P5")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qdog", description="q-Gaussian difference-of-Gaussians edge detection")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", parents=[_common()], help="detect edges in one image")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("kernel", parents=[_common()], help="export a kernel as CSV")
    p.add_argument("--kind", choices=KINDS, default="qgauss")
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("sweep", parents=[_common()], help="detect over a grid of q values")
    p.add_argument("--grid", type=_grid, default=None, help="comma-separated q values")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("compare", parents=[_common()], help="LoG vs DoG profiles and timing")
    p.add_argument("--sigma", type=float, default=2.5)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_compare, sigma1=2.5, sigma2=2.15)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PNMError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except QDogError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
