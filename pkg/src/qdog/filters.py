"""Same-size 2D convolution of grayscale images with square kernels."""
from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np

from .errors import KernelTooLargeError, NonSeparableError, ParameterError
from .imageio import GrayImage
from .kernelgen import Kernel, sample_qgauss_1d
from .qmath import QParams

# border policy -> numpy.pad mode; "reflect" mirrors about the pixel edge (dcba|abcd)
BORDERS = {"replicate": "edge", "reflect": "symmetric", "zero": "constant"}
DEFAULT_BORDER = "replicate"


@dataclass(frozen=True)
class ResponseMap:
    """Signed filter responses, same ``(height, width)`` as the source image."""

    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=float)
        if v.ndim != 2:
            raise ParameterError(f"response map must be 2D, got shape {v.shape}")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def height(self) -> int:
        return self.values.shape[0]

    @property
    def width(self) -> int:
        return self.values.shape[1]


def _pixels(image) -> np.ndarray:
    if isinstance(image, GrayImage):
        return image.pixels
    a = np.asarray(image, dtype=float)
    if a.ndim != 2:
        raise ParameterError(f"image must be 2D, got shape {a.shape}")
    return a


def pad(pixels: np.ndarray, radius: int, border: str) -> np.ndarray:
    if border not in BORDERS:
        raise ParameterError(f"border must be one of {sorted(BORDERS)}, got {border!r}")
    return np.pad(pixels, radius, mode=BORDERS[border])


@numba.njit(cache=True, nogil=True)
def _correlate_padded(padded, weights, height, width):
    # Per output pixel the taps are summed in weight row-major order; the
    # innermost loop runs across output columns so it vectorizes without
    # reordering any pixel's sum.
    kh, kw = weights.shape
    out = np.empty((height, width))
    acc = np.empty(width)
    for y in range(height):
        acc[:] = 0.0
        for ki in range(kh):
            row = padded[y + ki]
            for kj in range(kw):
                w = weights[ki, kj]
                if w == 0.0:
                    continue
                for x in range(width):
                    acc[x] += w * row[x + kj]
        out[y] = acc
    return out


def convolve(image, kernel: Kernel, border: str = DEFAULT_BORDER) -> ResponseMap:
    """True 2D convolution, output the same size as the input."""
    px = _pixels(image)
    h, w = px.shape
    if kernel.side > 2 * min(h, w):
        raise KernelTooLargeError(f"kernel side {kernel.side} exceeds twice the image size {w}x{h}")
    padded = pad(px, kernel.radius, border)
    flipped = np.ascontiguousarray(kernel.weights[::-1, ::-1])
    return ResponseMap(_correlate_padded(padded, flipped, h, w))


def _convolve_axis(px, taps, border, axis):
    r = (len(taps) - 1) // 2
    widths = [(0, 0), (0, 0)]
    widths[axis] = (r, r)
    padded = np.pad(px, widths, mode=BORDERS[border])
    n = px.shape[axis]
    out = np.zeros_like(px)
    # symmetric taps: flipping is a no-op, kept for the general definition
    for k, t in enumerate(taps[::-1]):
        out += t * (padded[k : k + n] if axis == 0 else padded[:, k : k + n])
    return out


def convolve_separable(image, params: QParams, radius: int, border: str = DEFAULT_BORDER) -> ResponseMap:
    """Rows-then-columns Gaussian convolution; only valid at q = 1."""
    if params.q != 1:
        raise NonSeparableError(f"q-Gaussian kernels factor only at q = 1, got q={params.q}")
    px = _pixels(image)
    h, w = px.shape
    if 2 * radius + 1 > 2 * min(h, w):
        raise KernelTooLargeError(f"kernel side {2 * radius + 1} exceeds twice the image size {w}x{h}")
    if border not in BORDERS:
        raise ParameterError(f"border must be one of {sorted(BORDERS)}, got {border!r}")
    taps = sample_qgauss_1d(params, radius)
    rows = _convolve_axis(px, taps, border, axis=1)
    return ResponseMap(_convolve_axis(rows, taps, border, axis=0))
