import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate

from qdog.errors import DomainError, ParameterError
from qdog.kernelgen import (
    R_CAP,
    Kernel,
    _sample_raw,
    dog_kernel,
    log_kernel,
    sample_qgauss_kernel,
    support_radius,
)
from qdog.qmath import QParams, gaussian_1d, log_2d, qgauss_1d

qs = st.floats(min_value=-3.0, max_value=2.8)
sigmas = st.floats(min_value=0.2, max_value=4.0)
radii = st.integers(min_value=1, max_value=6)


def assert_dihedral(w):
    np.testing.assert_array_equal(w, w.T)
    np.testing.assert_array_equal(w, w[::-1, :])
    np.testing.assert_array_equal(w, w[:, ::-1])
    np.testing.assert_array_equal(w, w[::-1, ::-1].T)


def quad_mass(r, params):
    return integrate.quad(lambda x: qgauss_1d(x, params), -r, r, points=[0.0], limit=400)[0]


# -- support_radius --------------------------------------------------------


def test_support_radius_examples():
    assert support_radius(QParams(1.0, 2.5), 1e-3) == 8
    assert support_radius(QParams(-1.0, 4.0), 0.3) == 4
    assert support_radius(QParams(-1.0, 4.0), 1e-6) == 4
    assert support_radius(QParams(1.0, 0.2), 1e-3) == 1


def test_gaussian_mass_beyond_three_sigma():
    p = QParams(1.0, 2.5)
    assert 1.0 - quad_mass(3 * 2.5, p) < 3e-3


@pytest.mark.parametrize("q, sigma", [(1.2, 1.0), (1.5, 0.7), (1.5, 2.0), (1.75, 0.2), (1.375, 0.2), (1.8, 0.5)])
@pytest.mark.parametrize("eps", [1e-2, 1e-3])
def test_heavy_tail_radius_is_smallest_covering(q, sigma, eps):
    p = QParams(q, sigma)
    r = support_radius(p, eps)
    assert 1 <= r < R_CAP
    assert quad_mass(r, p) >= 1 - eps - 1e-9
    if r > 1:
        assert quad_mass(r - 1, p) < 1 - eps


@pytest.mark.parametrize("q", [2.125, 2.5, 2.9])
def test_heavy_tail_radius_capped(q):
    assert support_radius(QParams(q, 0.2), 1e-3) == R_CAP


@given(qs, sigmas, st.floats(min_value=1e-6, max_value=0.5))
def test_support_radius_bounds(q, sigma, eps):
    r = support_radius(QParams(q, sigma), eps)
    assert 1 <= r <= max(R_CAP, math.ceil(3 * sigma))


@pytest.mark.parametrize("eps", [0.0, 1.0, -0.1, 2.0])
def test_support_radius_bad_epsilon(eps):
    with pytest.raises(DomainError):
        support_radius(QParams(1.0, 1.0), eps)


# -- sample_qgauss_kernel --------------------------------------------------


def test_flat_kernel():
    k = sample_qgauss_kernel(QParams(1.0, 1e6), 1)
    np.testing.assert_allclose(k.weights, 1 / 9, atol=1e-9)


def test_compact_kernel_is_delta():
    k = sample_qgauss_kernel(QParams(-1.0, 1.0), 2)
    expected = np.zeros((5, 5))
    expected[2, 2] = 1.0
    np.testing.assert_array_equal(k.weights, expected)


def test_gaussian_kernel_center():
    # brute force: (sum_i exp(-i^2/2))^2 over i = -3..3
    total = sum(math.exp(-(i * i + j * j) / 2) for i in range(-3, 4) for j in range(-3, 4))
    k = sample_qgauss_kernel(QParams(1.0, 1.0), 3)
    assert k.weights[3, 3] == pytest.approx(1 / total, rel=1e-14)
    assert k.weights[3, 3] == pytest.approx(0.15924112569070248, rel=1e-14)


@given(qs, sigmas, radii)
def test_qgauss_kernel_invariants(q, sigma, radius):
    k = sample_qgauss_kernel(QParams(q, sigma), radius)
    assert k.kind == "qgauss" and k.side == 2 * radius + 1
    assert k.weights.shape == (k.side, k.side)
    assert np.all(k.weights >= 0)
    assert abs(k.weights.sum() - 1.0) <= 1e-12
    assert k.weights[radius, radius] == k.weights.max()
    assert_dihedral(k.weights)


def test_kernel_is_immutable():
    k = sample_qgauss_kernel(QParams(1.0, 1.0), 2)
    with pytest.raises(ValueError):
        k.weights[0, 0] = 1.0


@pytest.mark.parametrize("radius", [0, -1, 1.5])
def test_bad_radius(radius):
    with pytest.raises(ParameterError):
        sample_qgauss_kernel(QParams(1.0, 1.0), radius)


@given(qs, sigmas, st.integers(1, 5), st.integers(1, 4))
def test_monotone_support(q, sigma, r, extra):
    small = _sample_raw(QParams(q, sigma), r)
    big = _sample_raw(QParams(q, sigma), r + extra)
    np.testing.assert_array_equal(big[extra:-extra, extra:-extra], small)


def test_separable_exactly_at_q1():
    for sigma in (0.5, 1.0, 2.5):
        raw = _sample_raw(QParams(1.0, sigma), 6)
        v = gaussian_1d(np.arange(-6, 7), 0, sigma)
        assert np.max(np.abs(raw - np.outer(v, v))) <= 1e-12


def test_not_separable_at_q2():
    p = QParams(2.0, 1.0)
    raw = _sample_raw(p, 4)
    v = qgauss_1d(np.arange(-4, 5), p)
    assert np.max(np.abs(raw - np.outer(v, v))) > 1e-6


# -- dog_kernel ------------------------------------------------------------


def test_fig2_dog_kernel_shape():
    k = dog_kernel(2.5, 2.15, 1.0, 8)
    assert k.kind == "dog" and k.sigmas == (2.5, 2.15)
    assert abs(k.weights.sum()) <= 1e-12
    assert k.weights[8, 8] < 0
    # positive ring somewhere away from the centre
    assert k.weights[8, 8 + 5] > 0
    assert_dihedral(k.weights)


def test_fig8_dog_kernel_zero_sum():
    k = dog_kernel(0.2, 0.1, 1.0, 1)
    assert abs(k.weights.sum()) <= 1e-12


@pytest.mark.parametrize("q", [-1.0, 0.5, 1.0, 1.5, 2.5])
def test_dog_continuity(q):
    sigma = 1.7
    k = dog_kernel(sigma * (1 + 1e-9), sigma, q, 5)
    assert np.max(np.abs(k.weights)) <= 1e-6


@given(qs, st.floats(0.3, 4.0), st.floats(0.1, 0.95), radii)
def test_dog_is_difference_of_parts(q, s1, ratio, radius):
    s2 = s1 * ratio
    k = dog_kernel(s1, s2, q, radius)
    a = sample_qgauss_kernel(QParams(q, s1), radius).weights
    b = sample_qgauss_kernel(QParams(q, s2), radius).weights
    np.testing.assert_array_equal(k.weights, a - b)
    assert abs(k.weights.sum()) <= 1e-12
    assert_dihedral(k.weights)


@pytest.mark.parametrize("s1, s2", [(1.0, 1.0), (1.0, 2.0)])
def test_dog_requires_ordered_sigmas(s1, s2):
    with pytest.raises(ParameterError, match="sigma2 < sigma1"):
        dog_kernel(s1, s2, 1.0, 3)


# -- log_kernel ------------------------------------------------------------


def test_log_kernel_examples():
    k = log_kernel(2.5, 8)
    assert k.kind == "log" and k.weights[8, 8] < 0
    k = log_kernel(1.0, 4)
    assert log_2d(1.0, 1.0, 1.0) == 0.0
    shift = k.weights[4, 4] - log_2d(0, 0, 1.0)
    for i, j in [(1, 1), (1, -1), (-1, 1), (-1, -1)]:
        assert k.weights[4 + i, 4 + j] == pytest.approx(shift, abs=1e-15)
    # bracket zero at r^2 = 2 sigma^2: only the small mean shift remains
    assert abs(shift) < 1e-5 * abs(k.weights[4, 4])


@given(st.floats(0.3, 5.0), radii)
def test_log_kernel_invariants(sigma, radius):
    k = log_kernel(sigma, radius)
    assert abs(k.weights.sum()) <= 1e-12
    assert_dihedral(k.weights)
    # recomputation from the continuous function, up to one constant shift
    o = np.arange(-radius, radius + 1)
    raw = log_2d(o[:, None], o[None, :], sigma)
    np.testing.assert_allclose(k.weights, raw - raw.mean(), rtol=0, atol=1e-15)


def test_kernel_shape_validation():
    with pytest.raises(ParameterError):
        Kernel(1, np.zeros((2, 2)), "dog", 1.0, (1.0, 0.5))
    with pytest.raises(ParameterError):
        Kernel(1, np.zeros((3, 3)), "box", 1.0, (1.0,))
