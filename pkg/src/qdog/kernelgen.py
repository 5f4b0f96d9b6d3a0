"""Discrete square kernels sampled from the continuous q-Gaussian and LoG."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import stdtr

from .errors import DegenerateKernelError, DomainError, ParameterError
from .qmath import QParams, gaussian_1d, log_2d_r2, qgauss_1d, qgauss_2d_r2

R_CAP = 128
DEFAULT_EPSILON = 1e-3

KINDS = ("qgauss", "dog", "log")


@dataclass(frozen=True)
class Kernel:
    """Odd-sided square weight grid, centre at ``[radius, radius]``.

    ``sigmas`` holds ``(sigma,)`` for qgauss/log kernels and ``(sigma1, sigma2)``
    for dog kernels. ``q`` is None for log kernels.
    """

    radius: int
    weights: np.ndarray = field(repr=False)
    kind: str
    q: float | None
    sigmas: tuple

    def __post_init__(self):
        w = np.array(self.weights, dtype=float)
        side = 2 * self.radius + 1
        if w.shape != (side, side):
            raise ParameterError(f"weights shape {w.shape} does not match radius {self.radius}")
        if self.kind not in KINDS:
            raise ParameterError(f"unknown kernel kind {self.kind!r}")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @property
    def side(self) -> int:
        return 2 * self.radius + 1

    def center_row(self) -> np.ndarray:
        return self.weights[self.radius]


def _offsets(radius):
    return np.arange(-radius, radius + 1)


def _radial_grid(radius):
    # integer arithmetic keeps i*i + j*j exact, so sampled grids are exactly dihedral
    o = _offsets(radius)
    return (o[:, None] ** 2 + o[None, :] ** 2).astype(float)


def _truncated_mass(r, q, sigma):
    # 1 < q < 3: the q-Gaussian is a scaled Student t with nu = (3-q)/(q-1)
    nu = (3.0 - q) / (q - 1.0)
    t = np.asarray(r, dtype=float) * math.sqrt((3.0 - q) / 2.0) / sigma
    return 2.0 * stdtr(nu, t) - 1.0


def support_radius(params: QParams, epsilon: float = DEFAULT_EPSILON) -> int:
    """Kernel radius in pixels covering the effective support of a q-Gaussian."""
    if not isinstance(params, QParams):
        raise DomainError("params must be a QParams instance")
    if not 0 < epsilon < 1:
        raise DomainError(f"epsilon must lie in (0, 1), got {epsilon}")
    q, sigma = params.q, params.sigma
    if q < 1:
        return max(1, min(math.ceil(sigma * math.sqrt(2.0 / (1.0 - q))), R_CAP))
    if q == 1:
        return max(1, math.ceil(3.0 * sigma))
    radii = np.arange(1, R_CAP + 1)
    covered = np.nonzero(_truncated_mass(radii, q, sigma) >= 1.0 - epsilon)[0]
    return int(radii[covered[0]]) if covered.size else R_CAP


def _sample_raw(params: QParams, radius: int) -> np.ndarray:
    return qgauss_2d_r2(_radial_grid(radius), params)


def _check_radius(radius):
    if int(radius) != radius or radius < 1:
        raise ParameterError(f"radius must be a positive integer, got {radius}")
    return int(radius)


def sample_qgauss_kernel(params: QParams, radius: int) -> Kernel:
    """Point-sample the 2D q-Gaussian at integer offsets and normalize to unit sum."""
    radius = _check_radius(radius)
    raw = _sample_raw(params, radius)
    total = raw.sum()
    if not total > 0:
        raise DegenerateKernelError(f"q-Gaussian kernel {params} radius {radius} sums to zero")
    return Kernel(radius, raw / total, "qgauss", params.q, (params.sigma,))


def sample_qgauss_1d(params: QParams, radius: int) -> np.ndarray:
    """Normalized 1D sample vector; its outer square is the 2D kernel only at q = 1."""
    radius = _check_radius(radius)
    if params.q == 1:
        v = np.asarray(gaussian_1d(_offsets(radius), 0.0, params.sigma))
    else:
        v = np.asarray(qgauss_1d(_offsets(radius), params))
    return v / v.sum()


def dog_kernel(sigma1: float, sigma2: float, q: float, radius: int) -> Kernel:
    """Wider normalized q-Gaussian minus the narrower one, on a shared grid."""
    if not sigma2 < sigma1:
        raise ParameterError(f"DoG requires sigma2 < sigma1, got sigma1={sigma1}, sigma2={sigma2}")
    radius = _check_radius(radius)
    wide = sample_qgauss_kernel(QParams(q, sigma1), radius)
    narrow = sample_qgauss_kernel(QParams(q, sigma2), radius)
    return Kernel(radius, wide.weights - narrow.weights, "dog", q, (sigma1, sigma2))


def log_kernel(sigma: float, radius: int) -> Kernel:
    """Sampled Laplacian of Gaussian, shifted by a constant to zero sum."""
    if not sigma > 0:
        raise DomainError(f"sigma must be > 0, got {sigma}")
    radius = _check_radius(radius)
    w = log_2d_r2(_radial_grid(radius), sigma)
    return Kernel(radius, w - w.mean(), "log", None, (sigma,))
