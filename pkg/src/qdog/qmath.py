"""Continuous functions: Gaussian family, LoG, q-exponential and q-Gaussians.

All functions accept scalars or numpy arrays. Scalar input gives a Python
float back.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

SQRT_PI = math.sqrt(math.pi)

# math.gamma overflows just above 171.6
_GAMMA_DIRECT_MAX = 170.0
# below this distance from q = 1 the power form of exp_q loses digits
_Q_NEAR_ONE = 1e-3


@dataclass(frozen=True)
class QParams:
    """Entropic index ``q`` and standard deviation ``sigma`` of one kernel."""

    q: float
    sigma: float

    def __post_init__(self):
        if not (math.isfinite(self.q) and math.isfinite(self.sigma)):
            raise DomainError(f"q and sigma must be finite, got q={self.q}, sigma={self.sigma}")
        if self.sigma <= 0:
            raise DomainError(f"sigma must be > 0, got {self.sigma}")
        if self.q >= 3:
            raise DomainError(f"q must be < 3, got {self.q}")


def _out(a):
    a = np.asarray(a)
    return float(a) if a.ndim == 0 else a


def gamma(x: float) -> float:
    """Gamma function for x > 0."""
    if not x > 0:
        raise DomainError(f"gamma requires x > 0, got {x}")
    return math.gamma(x)


def _gamma_ratio(a: float, b: float) -> float:
    if a <= _GAMMA_DIRECT_MAX and b <= _GAMMA_DIRECT_MAX:
        return gamma(a) / gamma(b)
    return math.exp(math.lgamma(a) - math.lgamma(b))


def q_exp(x, q: float):
    """Tsallis q-exponential ``[1 + (1-q) x]^(1/(1-q))``, zero where the bracket is <= 0."""
    x = np.asarray(x, dtype=float)
    if q == 1:
        return _out(np.exp(x))
    one_minus_q = 1.0 - q
    base = 1.0 + one_minus_q * x
    pos = base > 0
    safe = np.where(pos, base, 1.0)
    if abs(one_minus_q) < _Q_NEAR_ONE:
        val = np.exp(np.log1p(np.where(pos, one_minus_q * x, 0.0)) / one_minus_q)
    else:
        val = np.power(safe, 1.0 / one_minus_q)
    return _out(np.where(pos, val, 0.0))


def c_q(q: float) -> float:
    """Normalization constant of the 1D q-Gaussian (valid for q < 3)."""
    if not q < 3:
        raise DomainError(f"C_q is defined only for q < 3, got {q}")
    if q == 1:
        return SQRT_PI
    if q < 1:
        b = 1.0 / (1.0 - q)
        # (3-q)/(2(1-q)) == b + 1/2
        return 2.0 * SQRT_PI * _gamma_ratio(b, b + 0.5) / ((3.0 - q) * math.sqrt(1.0 - q))
    a = 1.0 / (q - 1.0)
    # (3-q)/(2(q-1)) == a - 1/2
    return SQRT_PI * _gamma_ratio(a - 0.5, a) / math.sqrt(q - 1.0)


def gaussian_1d(x, mu: float, sigma: float):
    _check_sigma(sigma)
    x = np.asarray(x, dtype=float)
    return _out(np.exp(-((x - mu) ** 2) / (2.0 * sigma**2)) / math.sqrt(2.0 * math.pi * sigma**2))


def ricker(x, sigma: float):
    """Second derivative of the centred Gaussian, sign as ``(x^2 - sigma^2)``."""
    _check_sigma(sigma)
    x = np.asarray(x, dtype=float)
    s2 = sigma**2
    return _out((x**2 - s2) * np.exp(-(x**2) / (2.0 * s2)) / (math.sqrt(2.0 * math.pi * s2) * s2**2))


def _r2(x, y):
    return np.asarray(x, dtype=float) ** 2 + np.asarray(y, dtype=float) ** 2


def gaussian_2d(x, y, sigma: float):
    _check_sigma(sigma)
    return _out(gaussian_2d_r2(_r2(x, y), sigma))


def gaussian_2d_r2(r2, sigma: float):
    """Isotropic 2D Gaussian as a function of squared radius."""
    r2 = np.asarray(r2, dtype=float)
    return np.exp(-r2 / (2.0 * sigma**2)) / (2.0 * math.pi * sigma**2)


def log_2d(x, y, sigma: float):
    """Laplacian of Gaussian."""
    _check_sigma(sigma)
    return _out(log_2d_r2(_r2(x, y), sigma))


def log_2d_r2(r2, sigma: float):
    r2 = np.asarray(r2, dtype=float)
    s2 = sigma**2
    return -(1.0 - r2 / (2.0 * s2)) * np.exp(-r2 / (2.0 * s2)) / (math.pi * s2**2)


def _cutoff(values, r2, params):
    # the bracket of exp_q can round to a tiny positive number right at the
    # support edge; compare squared radii directly so the edge is exact
    if params.q < 1:
        values = np.where(r2 >= 2.0 * params.sigma**2 / (1.0 - params.q), 0.0, values)
    return values


def qgauss_1d(x, params: QParams):
    if params.q == 1:
        return gaussian_1d(x, 0.0, params.sigma)
    x2 = np.asarray(x, dtype=float) ** 2
    s2 = params.sigma**2
    values = np.asarray(q_exp(-x2 / (2.0 * s2), params.q)) / (c_q(params.q) * math.sqrt(2.0 * s2))
    return _out(_cutoff(values, x2, params))


def qgauss_2d(x, y, params: QParams):
    return _out(qgauss_2d_r2(_r2(x, y), params))


def qgauss_2d_r2(r2, params: QParams):
    """2D q-Gaussian as a function of squared radius; exactly the Gaussian at q = 1."""
    if params.q == 1:
        return gaussian_2d_r2(r2, params.sigma)
    r2 = np.asarray(r2, dtype=float)
    s2 = params.sigma**2
    cq = c_q(params.q)
    return _cutoff(np.asarray(q_exp(-r2 / (2.0 * s2), params.q)) / (2.0 * cq**2 * s2), r2, params)


def _check_sigma(sigma):
    if not sigma > 0:
        raise DomainError(f"sigma must be > 0, got {sigma}")
