"""Plain (P2) PGM images."""

from pathlib import Path
from typing import Optional, Union

import numpy as np

from ..exceptions import FormatError
from ..models.image import BinaryImage
from ..models.plane import DataPlane

PathLike = Union[str, Path]


def write_pgm(path: PathLike, cells: np.ndarray, maxval: Optional[int] = None) -> Path:
    """
    Write a 2-D array of non-negative integers as plain PGM, top row first.

    maxval defaults to the largest cell value (at least 1).
    """
    cells = np.asarray(cells, dtype=np.int64)
    if cells.ndim != 2:
        raise ValueError(f"PGM cells must be 2-D, got shape {cells.shape}")
    if (cells < 0).any():
        raise ValueError("PGM cells must be non-negative")
    if maxval is None:
        maxval = max(int(cells.max()), 1)
    if int(cells.max()) > maxval:
        raise ValueError(f"cell value {int(cells.max())} exceeds maxval {maxval}")

    height, width = cells.shape
    lines = ["P2", f"{width} {height}", str(maxval)]
    lines.extend(" ".join(str(v) for v in row) for row in cells)
    path = Path(path)
    path.write_text("\n".join(lines) + "\n")
    return path


def _tokens(text: str):
    for line in text.splitlines():
        yield from line.split('#', 1)[0].split()


def read_pgm(path: PathLike) -> np.ndarray:
    """
    Read a plain PGM into an int64 array, top row first.

    Raises:
        FormatError: If the header or pixel data are malformed
    """
    path = Path(path)
    try:
        tokens = list(_tokens(path.read_text()))
    except (OSError, UnicodeDecodeError) as e:
        raise FormatError(f"{path}: cannot read PGM: {e}") from e
    if not tokens or tokens[0] != "P2":
        raise FormatError(f"{path}: not a plain PGM (expected magic 'P2')")
    try:
        width, height, maxval = (int(t) for t in tokens[1:4])
        values = np.array([int(t) for t in tokens[4:]], dtype=np.int64)
    except ValueError as e:
        raise FormatError(f"{path}: non-integer header or pixel value") from e
    if width < 1 or height < 1 or maxval < 1:
        raise FormatError(f"{path}: invalid header {width}x{height} maxval {maxval}")
    if values.size != width * height:
        raise FormatError(f"{path}: expected {width * height} pixels, found {values.size}")
    if (values < 0).any() or (values > maxval).any():
        raise FormatError(f"{path}: pixel values outside [0, {maxval}]")
    return values.reshape(height, width)


def write_image(path: PathLike, img: BinaryImage) -> Path:
    return write_pgm(path, img.cells, maxval=1)


def read_image(path: PathLike) -> BinaryImage:
    """
    Read a binary image (maxval 1).

    Raises:
        FormatError: If any pixel is not 0 or 1
    """
    cells = read_pgm(path)
    if (cells > 1).any():
        raise FormatError(f"{path}: binary image pixels must be 0 or 1")
    return BinaryImage(cells)


def write_plane(path: PathLike, plane: DataPlane, maxval: Optional[int] = None) -> Path:
    """Write a plane with the highest output row on top."""
    return write_pgm(path, np.flipud(plane.cells), maxval)
