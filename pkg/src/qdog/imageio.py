"""Portable anymap (P2/P3/P5/P6) codec and the image containers."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    MalformedHeaderError,
    MaxvalOutOfRangeError,
    ParameterError,
    TruncatedDataError,
    UnsupportedMagicError,
)

LUMA = np.array([0.299, 0.587, 0.114])
_WHITESPACE = b" \t\n\r\v\f"
_CHANNELS = {b"P2": 1, b"P5": 1, b"P3": 3, b"P6": 3}


@dataclass(frozen=True)
class GrayImage:
    """Row-major ``(height, width)`` luminance grid with values in [0, 1]."""

    pixels: np.ndarray

    def __post_init__(self):
        p = np.array(self.pixels, dtype=float)
        if p.ndim != 2 or p.size == 0:
            raise ParameterError(f"image must be a non-empty 2D grid, got shape {p.shape}")
        if not np.all((p >= 0.0) & (p <= 1.0)):
            raise ParameterError("pixel values must lie in [0, 1]")
        p.setflags(write=False)
        object.__setattr__(self, "pixels", p)

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]


@dataclass(frozen=True)
class EdgeMap:
    """Binary ``(height, width)`` grid; True marks an edge pixel."""

    bits: np.ndarray

    def __post_init__(self):
        b = np.array(self.bits, dtype=bool)
        if b.ndim != 2:
            raise ParameterError(f"edge map must be 2D, got shape {b.shape}")
        b.setflags(write=False)
        object.__setattr__(self, "bits", b)

    @property
    def height(self) -> int:
        return self.bits.shape[0]

    @property
    def width(self) -> int:
        return self.bits.shape[1]

    def count(self) -> int:
        return int(self.bits.sum())


class _Header:
    """Token reader for anymap headers; tracks the byte offset for error messages."""

    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0
        self.start = 0  # offset of the most recent token

    def _skip(self):
        data, n = self.data, len(self.data)
        while self.pos < n:
            c = data[self.pos : self.pos + 1]
            if c in _WHITESPACE:
                self.pos += 1
            elif c == b"#":
                while self.pos < n and data[self.pos] not in (10, 13):
                    self.pos += 1
            else:
                break

    def integer(self, what: str) -> int:
        self._skip()
        start = self.start = self.pos
        while self.pos < len(self.data) and 48 <= self.data[self.pos] <= 57:
            self.pos += 1
        if self.pos == start:
            if start >= len(self.data):
                raise MalformedHeaderError(f"unexpected end of header reading {what}", start)
            raise MalformedHeaderError(f"expected integer for {what}", start)
        if self.pos < len(self.data) and self.data[self.pos : self.pos + 1] not in _WHITESPACE + b"#":
            raise MalformedHeaderError(f"invalid character in {what}", self.pos)
        return int(self.data[start : self.pos])


def rgb_to_gray(rgb: np.ndarray) -> np.ndarray:
    """Luminance of an ``(..., 3)`` array with components in [0, 1]."""
    return np.clip(np.asarray(rgb, dtype=float) @ LUMA, 0.0, 1.0)


def read_pnm(data: bytes) -> GrayImage:
    """Decode a P2/P5 graymap or P3/P6 pixmap into a GrayImage."""
    data = bytes(data)
    magic = data[:2]
    if magic not in _CHANNELS:
        raise UnsupportedMagicError(f"unsupported magic number {magic!r}", 0)
    channels = _CHANNELS[magic]
    hdr = _Header(data)
    hdr.pos = 2
    width = hdr.integer("width")
    height = hdr.integer("height")
    if width < 1 or height < 1:
        raise MalformedHeaderError(f"image dimensions must be positive, got {width}x{height}", hdr.pos)
    maxval = hdr.integer("maxval")
    if not 1 <= maxval <= 65535:
        raise MaxvalOutOfRangeError(f"maxval {maxval} outside 1..65535", hdr.start)
    n = width * height * channels

    if magic in (b"P5", b"P6"):
        if hdr.pos >= len(data):
            raise TruncatedDataError("missing raster", hdr.pos)
        start = hdr.pos + 1  # exactly one whitespace byte precedes the raster
        dtype = np.dtype(">u2") if maxval > 255 else np.dtype("u1")
        need = n * dtype.itemsize
        if len(data) - start < need:
            raise TruncatedDataError(f"raster needs {need} bytes, found {len(data) - start}", len(data))
        samples = np.frombuffer(data, dtype=dtype, count=n, offset=start).astype(np.int64)
        if samples.max() > maxval:
            bad = int(np.argmax(samples > maxval))
            raise MaxvalOutOfRangeError("sample exceeds maxval", start + bad * dtype.itemsize)
    else:
        samples = np.empty(n, dtype=np.int64)
        for k in range(n):
            hdr._skip()
            if hdr.pos >= len(data):
                raise TruncatedDataError(f"expected {n} samples, found {k}", hdr.pos)
            samples[k] = hdr.integer("sample")
            if samples[k] > maxval:
                raise MaxvalOutOfRangeError("sample exceeds maxval", hdr.start)

    values = samples.astype(float) / maxval
    if channels == 3:
        values = rgb_to_gray(values.reshape(height, width, 3))
    return GrayImage(values.reshape(height, width))


def quantize(values: np.ndarray) -> np.ndarray:
    """Round-half-up onto 0..255."""
    return np.floor(np.asarray(values, dtype=float) * 255.0 + 0.5).astype(np.uint8)


def write_pgm(image: GrayImage | EdgeMap, binary: bool = True) -> bytes:
    """Encode as P5 (binary) or P2 (ascii) with maxval 255."""
    if isinstance(image, EdgeMap):
        samples = np.where(image.bits, 255, 0).astype(np.uint8)
    elif isinstance(image, GrayImage):
        samples = quantize(image.pixels)
    else:
        raise ParameterError(f"cannot encode {type(image).__name__}")
    h, w = samples.shape
    if binary:
        return b"P5\n%d %d\n255\n" % (w, h) + samples.tobytes()
    rows = (" ".join(str(v) for v in row) for row in samples)
    return (f"P2\n{w} {h}\n255\n" + "\n".join(rows) + "\n").encode("ascii")


def load(path) -> GrayImage:
    return read_pnm(Path(path).read_bytes())


def save(path, image: GrayImage | EdgeMap, binary: bool = True) -> None:
    Path(path).write_bytes(write_pgm(image, binary=binary))
