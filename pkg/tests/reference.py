"""Slow, independently written references used as test oracles."""
import math

import numpy as np

_NP_MODES = {"replicate": "edge", "reflect": "symmetric", "zero": "constant"}


def _read(img, y, x, border):
    h, w = len(img), len(img[0])
    if 0 <= y < h and 0 <= x < w:
        return img[y][x]
    if border == "zero":
        return 0.0
    if border == "replicate":
        return img[min(max(y, 0), h - 1)][min(max(x, 0), w - 1)]
    # half-sample symmetric, periodic with period 2n
    def mirror(i, n):
        i %= 2 * n
        return i if i < n else 2 * n - 1 - i

    return img[mirror(y, h)][mirror(x, w)]


def brute_convolve(image, weights, border="replicate"):
    """Quadruple loop, true convolution, plain Python floats."""
    img = np.asarray(image, dtype=float).tolist()
    k = np.asarray(weights, dtype=float).tolist()
    r = (len(k) - 1) // 2
    h, w = len(img), len(img[0])
    out = [[0.0] * w for _ in range(h)]
    for y in range(h):
        for x in range(w):
            s = 0.0
            for i in range(-r, r + 1):
                for j in range(-r, r + 1):
                    s += k[i + r][j + r] * _read(img, y - i, x - j, border)
            out[y][x] = s
    return np.array(out)


def gaussian_weights(sigma, radius):
    """Classic normalized 2D Gaussian kernel written from scratch."""
    g = [[math.exp(-(i * i + j * j) / (2.0 * sigma * sigma)) for j in range(-radius, radius + 1)]
         for i in range(-radius, radius + 1)]
    total = sum(sum(row) for row in g)
    return np.array([[v / total for v in row] for row in g])


def brute_zero_cross(resp, threshold=0.0):
    resp = np.asarray(resp, dtype=float)
    h, w = resp.shape
    out = np.zeros((h, w), dtype=bool)
    pairs = [((0, -1), (0, 1)), ((-1, 0), (1, 0)), ((-1, -1), (1, 1)), ((-1, 1), (1, -1))]
    for y in range(h):
        for x in range(w):
            for (a, b), (c, d) in pairs:
                ya, xa, yb, xb = y + a, x + b, y + c, x + d
                if not (0 <= ya < h and 0 <= xa < w and 0 <= yb < h and 0 <= xb < w):
                    continue
                u, v = resp[ya, xa], resp[yb, xb]
                if u * v < 0 and abs(u - v) > threshold:
                    out[y, x] = True
                    break
    return out


def classic_dog_edges(image, sigma1, sigma2, radius, threshold=0.0, border="replicate"):
    """Gaussian DoG detector via scipy.ndimage, independent of qdog."""
    from scipy import ndimage

    mode = {"replicate": "nearest", "reflect": "reflect", "zero": "constant"}[border]
    k = gaussian_weights(sigma1, radius) - gaussian_weights(sigma2, radius)
    resp = ndimage.convolve(np.asarray(image, dtype=float), k, mode=mode, cval=0.0)
    return brute_zero_cross(resp, threshold)
