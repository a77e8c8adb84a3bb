"""PGM (P2 plain / P5 binary) masks as raster grids.

Nonzero pixels are occupied. The image border is cleared on load. The first
image row becomes the top of the frame, so it maps to the largest ``iy``.
"""

from __future__ import annotations

import numpy as np

from ..errors import InputError
from ..geometry.raster import MODES, RasterGrid
from ..geometry.scene import Frame


def _tokens(data: bytes, count: int, start: int = 0):
    """Read ``count`` whitespace-separated header tokens, skipping comments."""
    out = []
    i = start
    n = len(data)
    while len(out) < count:
        while i < n and data[i : i + 1].isspace():
            i += 1
        if i < n and data[i : i + 1] == b"#":
            while i < n and data[i : i + 1] not in (b"\n", b"\r"):
                i += 1
            continue
        j = i
        while j < n and not data[j : j + 1].isspace() and data[j : j + 1] != b"#":
            j += 1
        if j == i:
            raise InputError("truncated PGM header", "/header")
        out.append(data[i:j])
        i = j
    return out, i


def read_pgm(data: bytes) -> np.ndarray:
    """Decode a PGM image to a boolean occupancy array in image row order."""
    (magic, w, hgt, maxval), pos = _tokens(data, 4)
    if magic not in (b"P2", b"P5"):
        raise InputError(f"unsupported magic {magic!r}; expected P2 or P5", "/header/magic")
    try:
        width, height, maxv = int(w), int(hgt), int(maxval)
    except ValueError:
        raise InputError("width, height and maxval must be integers", "/header") from None
    if width < 1 or height < 1 or not (0 < maxv < 65536):
        raise InputError("invalid image dimensions or maxval", "/header")
    count = width * height
    if magic == b"P2":
        try:
            values = np.array(data[pos:].split(), dtype=np.int64)
        except ValueError:
            raise InputError("non-integer pixel value", "/pixels") from None
        if values.size != count:
            raise InputError(f"expected {count} pixels, found {values.size}", "/pixels")
    else:
        body = data[pos + 1 :]
        dtype = np.dtype(">u2") if maxv > 255 else np.dtype("u1")
        if len(body) < count * dtype.itemsize:
            raise InputError("truncated pixel data", "/pixels")
        values = np.frombuffer(body, dtype=dtype, count=count)
    if (values < 0).any() or (values > maxv).any():
        raise InputError("pixel value outside [0, maxval]", "/pixels")
    return values.reshape(height, width) != 0


def mask_grid(mask: np.ndarray, h: float = 1.0, mode: str = "outer") -> RasterGrid:
    """Wrap an image-ordered mask as a grid with the border cleared."""
    if mode not in MODES:
        raise InputError(f"mode must be one of {MODES}", "/mode")
    occ = np.flipud(np.asarray(mask, dtype=bool)).copy()
    ny, nx = occ.shape
    if nx < 5 or ny < 5:
        raise InputError("masks must be at least 5x5 pixels", "/header")
    occ[0, :] = occ[-1, :] = False
    occ[:, 0] = occ[:, -1] = False
    return RasterGrid(Frame(0.0, 0.0, nx * h, ny * h, h), occ, mode)


def load_pgm(path, h: float = 1.0, mode: str = "outer") -> RasterGrid:
    with open(path, "rb") as fh:
        return mask_grid(read_pgm(fh.read()), h, mode)


def write_pgm(occupancy: np.ndarray) -> bytes:
    """Plain P2 encoding of a grid's occupancy (top row first)."""
    img = np.flipud(np.asarray(occupancy, dtype=np.uint8))
    lines = [f"P2\n{img.shape[1]} {img.shape[0]}\n1"]
    lines += [" ".join(str(v) for v in row) for row in img]
    return ("\n".join(lines) + "\n").encode("ascii")
