"""Deterministic synthetic scene used as the bundled test image."""
from __future__ import annotations

from importlib import resources

import numpy as np

from .imageio import GrayImage, quantize, read_pnm

BUNDLED = "scene512.pgm"


def synthetic_scene(size: int = 512, seed: int = 0) -> GrayImage:
    """Shapes, a ramp and a chirp texture, quantized to 8 bits.

    Quantizing keeps the image identical to its PGM file.
    """
    rng = np.random.default_rng(seed)
    yy, xx = np.mgrid[0:size, 0:size] / size
    img = 0.15 + 0.25 * xx  # illumination ramp

    # disks of varying contrast
    for cx, cy, r, v in [(0.25, 0.25, 0.12, 0.85), (0.7, 0.3, 0.08, 0.35), (0.55, 0.75, 0.15, 0.65)]:
        img = np.where((xx - cx) ** 2 + (yy - cy) ** 2 < r**2, v, img)
    # rotated square
    u = (xx - 0.22) * np.cos(0.5) + (yy - 0.72) * np.sin(0.5)
    w = -(xx - 0.22) * np.sin(0.5) + (yy - 0.72) * np.cos(0.5)
    img = np.where((np.abs(u) < 0.1) & (np.abs(w) < 0.1), 0.95, img)
    # bars
    img = np.where((xx > 0.82) & (xx < 0.95) & (np.floor(yy * 16) % 2 == 0), 0.05, img)
    # chirp patch
    patch = (xx > 0.35) & (xx < 0.55) & (yy > 0.05) & (yy < 0.45)
    img = np.where(patch, 0.5 + 0.3 * np.sin(2 * np.pi * 40 * (xx - 0.35) ** 2 / 0.2), img)
    img = img + rng.normal(0.0, 0.01, img.shape)
    return GrayImage(quantize(np.clip(img, 0.0, 1.0)) / 255.0)


def bundled_image() -> GrayImage:
    """The 512x512 scene shipped with the package."""
    return read_pnm(resources.files("qdog.data").joinpath(BUNDLED).read_bytes())
