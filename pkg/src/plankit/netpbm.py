"""Netpbm (PGM P2/P5, PPM P3/P6) reader producing luminance rasters."""

from __future__ import annotations

import numpy as np

from .errors import MalformedHeaderError, TruncatedDataError, UnsupportedFormatError

_WHITESPACE = b" \t\n\r\v\f"
_FORMATS = {b"P2": (1, False), b"P5": (1, True), b"P3": (3, False), b"P6": (3, True)}


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0
        self.token_start = 0

    def skip_space_and_comments(self) -> None:
        data = self.data
        while self.pos < len(data):
            c = data[self.pos : self.pos + 1]
            if c in _WHITESPACE and c:
                self.pos += 1
            elif c == b"#":
                while self.pos < len(data) and data[self.pos] not in b"\r\n":
                    self.pos += 1
            else:
                break

    def integer(self, what: str, truncated_error=MalformedHeaderError) -> int:
        self.skip_space_and_comments()
        start = self.token_start = self.pos
        while self.pos < len(self.data) and self.data[self.pos : self.pos + 1].isdigit():
            self.pos += 1
        if start == self.pos:
            if start >= len(self.data):
                raise truncated_error(f"unexpected end of data while reading {what}", start)
            raise MalformedHeaderError(f"expected an integer for {what}", start)
        return int(self.data[start : self.pos])


def read_netpbm(data: bytes) -> np.ndarray:
    """Decode a Netpbm image into an ``(height, width)`` uint8 luminance array.

    Samples are rescaled to 0-255 when ``maxval`` differs from 255. Colour
    pixels are reduced with ``round(0.299 R + 0.587 G + 0.114 B)``.
    """
    data = bytes(data)
    magic = data[:2]
    if len(data) < 2 or magic not in _FORMATS:
        raise UnsupportedFormatError(f"unsupported magic number {magic!r}", 0)
    channels, binary = _FORMATS[magic]
    rd = _Reader(data)
    rd.pos = 2
    if rd.pos < len(data) and data[rd.pos : rd.pos + 1] not in _WHITESPACE and data[2:3] != b"#":
        raise MalformedHeaderError("magic number must be followed by whitespace", 2)
    width = rd.integer("width")
    height = rd.integer("height")
    maxval = rd.integer("maxval")
    maxval_pos = rd.token_start
    if width < 1 or height < 1:
        raise MalformedHeaderError(f"image dimensions must be positive, got {width}x{height}", maxval_pos)
    if not 1 <= maxval <= 65535:
        raise MalformedHeaderError(f"maxval must be in 1..65535, got {maxval}", maxval_pos)
    count = width * height * channels

    if binary:
        if rd.pos >= len(data) or data[rd.pos : rd.pos + 1] not in _WHITESPACE:
            raise MalformedHeaderError("expected a single whitespace byte after maxval", rd.pos)
        start = rd.pos + 1
        dtype = np.dtype(">u2") if maxval > 255 else np.dtype(np.uint8)
        need = count * dtype.itemsize
        if len(data) - start < need:
            raise TruncatedDataError(
                f"expected {need} bytes of pixel data, found {len(data) - start}", len(data)
            )
        samples = np.frombuffer(data, dtype=dtype, count=count, offset=start).astype(np.int64)
    else:
        samples = np.empty(count, dtype=np.int64)
        for i in range(count):
            samples[i] = rd.integer(f"sample {i}", truncated_error=TruncatedDataError)
        if np.any(samples > maxval):
            bad = int(np.argmax(samples > maxval))
            raise MalformedHeaderError(f"sample {bad} exceeds maxval {maxval}", rd.pos)

    if maxval != 255:
        samples = (samples * 255 + maxval // 2) // maxval
    samples = samples.reshape(height, width, channels)
    if channels == 3:
        r, g, b = samples[..., 0], samples[..., 1], samples[..., 2]
        # integer form of round(0.299 R + 0.587 G + 0.114 B), halves rounded up
        lum = (299 * r + 587 * g + 114 * b + 500) // 1000
    else:
        lum = samples[..., 0]
    return lum.astype(np.uint8)


def encode_pgm(luminance: np.ndarray, binary: bool = True) -> bytes:
    """Encode an 8-bit ``(height, width)`` array as a P5 (or P2) file."""
    arr = np.asarray(luminance, dtype=np.uint8)
    h, w = arr.shape
    if binary:
        return f"P5\n{w} {h}\n255\n".encode() + arr.tobytes()
    rows = "\n".join(" ".join(str(int(v)) for v in row) for row in arr)
    return f"P2\n{w} {h}\n255\n{rows}\n".encode()
