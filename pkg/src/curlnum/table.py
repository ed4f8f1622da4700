"""Suffix lookup table: curl (capped at 4) of every length-w {2,3}-sequence.

In memory the table is a plain uint8 array of 2^w entries holding 1..4, so
kernels can index it directly.  On disk it is packed two bits per entry
(value minus one) behind an 8-byte header; the encoding is fixed
little-endian so files are bit-identical across platforms.
"""

import os
import struct

import numpy as np

from .errors import CapExceeded
from . import backend

DEFAULT_WIDTH = 18
MAX_WIDTH = 28

_MAGIC = b"SCNT"
_VERSION = 1
_HEADER = struct.Struct("<4sBB2x")  # magic, version, width, padding


class SuffixCNTable:
    """Immutable lookup table; share freely across threads."""

    def __init__(self, w: int, codes: np.ndarray):
        self.w = w
        self.codes = codes

    @classmethod
    def build(cls, w: int = DEFAULT_WIDTH, threads: int = 1) -> "SuffixCNTable":
        if not 1 <= w <= MAX_WIDTH:
            raise CapExceeded("table width %d outside 1..%d" % (w, MAX_WIDTH))
        kern = backend.kernels()
        codes = np.zeros(1 << w, dtype=np.uint8)
        bounds = backend.shard_bounds(0, 1 << w, threads)
        if len(bounds) == 1:
            kern.build_codes_range(w, 0, 1 << w, codes)
        else:
            from concurrent.futures import ThreadPoolExecutor
            with ThreadPoolExecutor(len(bounds)) as pool:
                list(pool.map(lambda b: kern.build_codes_range(w, b[0], b[1], codes), bounds))
        return cls(w, codes)

    def save(self, path: str) -> None:
        vals = self.codes - 1  # 0..3
        if vals.size % 4:
            vals = np.concatenate([vals, np.zeros(4 - vals.size % 4, dtype=np.uint8)])
        packed = (vals[0::4]
                  | (vals[1::4] << 2)
                  | (vals[2::4] << 4)
                  | (vals[3::4] << 6))
        tmp = path + ".tmp"
        with open(tmp, "wb") as fh:
            fh.write(_HEADER.pack(_MAGIC, _VERSION, self.w))
            fh.write(packed.astype(np.uint8).tobytes())
        os.replace(tmp, path)

    @classmethod
    def load(cls, path: str) -> "SuffixCNTable":
        with open(path, "rb") as fh:
            magic, version, w = _HEADER.unpack(fh.read(_HEADER.size))
            if magic != _MAGIC or version != _VERSION:
                raise ValueError("not a suffix table file: %s" % path)
            packed = np.frombuffer(fh.read(), dtype=np.uint8)
        if packed.size * 4 < 1 << w:
            raise ValueError("truncated suffix table file: %s" % path)
        codes = np.empty(packed.size * 4, dtype=np.uint8)
        codes[0::4] = packed & 3
        codes[1::4] = (packed >> 2) & 3
        codes[2::4] = (packed >> 4) & 3
        codes[3::4] = (packed >> 6) & 3
        codes = codes[:1 << w] + 1
        return cls(w, codes)


_default = None


def default_table() -> SuffixCNTable:
    """Process-wide table at the default width, built once on first use."""
    global _default
    if _default is None:
        _default = SuffixCNTable.build(DEFAULT_WIDTH)
    return _default
