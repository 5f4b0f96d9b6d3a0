"""Zero-crossing extraction and the q-Gaussian DoG detection pipeline."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .filters import BORDERS, DEFAULT_BORDER, ResponseMap, _pixels, convolve
from .imageio import EdgeMap
from .kernelgen import DEFAULT_EPSILON, Kernel, dog_kernel, support_radius
from .qmath import QParams

# neighbour pairs straddling the centre: left/right, up/down, both diagonals
_PAIRS = (((0, -1), (0, 1)), ((-1, 0), (1, 0)), ((-1, -1), (1, 1)), ((-1, 1), (1, -1)))


@dataclass(frozen=True)
class DetectParams:
    q: float = 1.0
    sigma1: float = 0.2
    sigma2: float = 0.1
    threshold: float = 0.0
    border: str = DEFAULT_BORDER
    radius_override: int | None = None

    def __post_init__(self):
        for name in ("q", "sigma1", "sigma2", "threshold"):
            if not math.isfinite(getattr(self, name)):
                raise ParameterError(f"{name} must be finite")
        if not self.sigma2 > 0:
            raise ParameterError(f"sigma2 must be > 0, got {self.sigma2}")
        if not self.sigma2 < self.sigma1:
            raise ParameterError(f"sigma2 < sigma1 required, got sigma1={self.sigma1}, sigma2={self.sigma2}")
        if not self.q < 3:
            raise ParameterError(f"q < 3 required, got {self.q}")
        if self.threshold < 0:
            raise ParameterError(f"threshold must be >= 0, got {self.threshold}")
        if self.border not in BORDERS:
            raise ParameterError(f"border must be one of {sorted(BORDERS)}, got {self.border!r}")
        r = self.radius_override
        if r is not None and (int(r) != r or r < 1):
            raise ParameterError(f"radius_override must be a positive integer, got {r}")

    def radius(self) -> int:
        if self.radius_override is not None:
            return int(self.radius_override)
        return support_radius(QParams(self.q, self.sigma1), DEFAULT_EPSILON)

    def kernel(self) -> Kernel:
        return dog_kernel(self.sigma1, self.sigma2, self.q, self.radius())


def zero_cross(response, threshold: float = 0.0) -> EdgeMap:
    """Mark pixels whose opposite neighbours have strictly opposite signs.

    A straddling pair only counts when the two responses differ by more than
    ``threshold``. Pairs reaching outside the grid are ignored.
    """
    if threshold < 0:
        raise ParameterError(f"threshold must be >= 0, got {threshold}")
    v = response.values if isinstance(response, ResponseMap) else np.asarray(response, dtype=float)
    h, w = v.shape
    # NaN padding: comparisons with NaN are False, so off-grid pairs never fire
    p = np.pad(v, 1, mode="constant", constant_values=np.nan)
    edges = np.zeros((h, w), dtype=bool)
    for (dy1, dx1), (dy2, dx2) in _PAIRS:
        a = p[1 + dy1 : 1 + dy1 + h, 1 + dx1 : 1 + dx1 + w]
        b = p[1 + dy2 : 1 + dy2 + h, 1 + dx2 : 1 + dx2 + w]
        opposite = ((a > 0) & (b < 0)) | ((a < 0) & (b > 0))
        edges |= opposite & (np.abs(a - b) > threshold)
    return EdgeMap(edges)


def rounding_floor(kernel: Kernel, pixels: np.ndarray) -> float:
    """Worst-case rounding error of one convolution output.

    Bound for recursive summation of ``n`` products: ``n * u * sum|k| * max|x|``.
    """
    n = int(np.count_nonzero(kernel.weights))
    unit = np.finfo(float).eps / 2
    return n * unit * float(np.abs(kernel.weights).sum()) * float(np.abs(pixels).max(initial=0.0))


def dog_response(image, params: DetectParams) -> ResponseMap:
    """DoG response with sub-rounding-error values snapped to exactly zero.

    Flat regions leave a residue of order eps * sum|k| whose sign is noise;
    without the snap it would produce spurious crossings at threshold 0.
    """
    px = _pixels(image)
    kernel = params.kernel()
    values = np.array(convolve(px, kernel, params.border).values)
    values[np.abs(values) <= rounding_floor(kernel, px)] = 0.0
    return ResponseMap(values)


def detect_edges(image, params: DetectParams) -> EdgeMap:
    return zero_cross(dog_response(image, params), params.threshold)
