"""String matrix and layer models."""

from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from .image import BinaryImage, TriValuedMask

ALPHABET = ('0', '1', '*')
DONT_CARE = '*'

_MASK_CODES = {'1': 1, '0': 0, '*': -1}


def _validated_chars(chars, ndim: int, kind: str) -> np.ndarray:
    array = np.array(chars, dtype='<U1')
    if array.ndim != ndim:
        raise ValueError(f"{kind} must be {ndim}-dimensional, got {array.ndim}")
    if array.shape[0] < 1 or array.shape[0] != array.shape[1]:
        raise ValueError(f"{kind} must be square and non-empty, got shape {array.shape[:2]}")
    if not np.isin(array, ALPHABET).all():
        raise ValueError(f"{kind} characters must be in {ALPHABET}")
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Layer:
    """Square grid of single characters over {'0', '1', '*'}."""
    chars: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, 'chars', _validated_chars(self.chars, 2, "Layer"))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[str]]) -> 'Layer':
        """Rows given as strings ("01*") or as sequences of characters."""
        return cls(np.array([list("".join(row)) for row in rows], dtype='<U1'))

    @classmethod
    def from_image(cls, img: BinaryImage) -> 'Layer':
        if img.width != img.height:
            raise ValueError(f"Layer needs a square image, got {img.width}x{img.height}")
        return cls(np.where(img.foreground, '1', '0'))

    @property
    def size(self) -> int:
        return int(self.chars.shape[0])

    @property
    def ones(self) -> np.ndarray:
        return self.chars == '1'

    @property
    def zeros(self) -> np.ndarray:
        return self.chars == '0'

    def to_mask(self) -> TriValuedMask:
        """'1' -> FG, '0' -> BG, '*' -> DC, anchored at the center."""
        codes = np.vectorize(_MASK_CODES.get, otypes=[np.int64])(self.chars)
        return TriValuedMask(codes)

    def to_matrix(self) -> 'StringMatrix':
        """Depth-1 string matrix with the same cells."""
        return StringMatrix(self.chars[:, :, np.newaxis])

    def to_rows(self) -> List[str]:
        return ["".join(row) for row in self.chars]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Layer):
            return NotImplemented
        return self.chars.shape == other.chars.shape and bool(np.array_equal(self.chars, other.chars))

    def __hash__(self) -> int:
        return hash(tuple(self.to_rows()))

    def __repr__(self) -> str:
        return f"Layer({'/'.join(self.to_rows())})"


@dataclass(frozen=True, eq=False)
class StringMatrix:
    """
    n x n matrix of equal-length strings over {'0', '1', '*'}.

    Stored as an (n, n, depth) character array; index k of the last axis is
    the k-th character of every cell.
    """
    chars: np.ndarray

    def __post_init__(self):
        chars = _validated_chars(self.chars, 3, "StringMatrix")
        if chars.shape[2] < 1:
            raise ValueError("StringMatrix depth must be >= 1")
        object.__setattr__(self, 'chars', chars)

    @classmethod
    def from_cells(cls, cells: Sequence[Sequence[str]]) -> 'StringMatrix':
        """
        Build from a square grid of cell strings.

        Raises:
            ValueError: If the grid is not square or cell lengths differ
        """
        lengths = {len(cell) for row in cells for cell in row}
        if len(lengths) != 1:
            raise ValueError(f"cells must share one length, got lengths {sorted(lengths)}")
        return cls(np.array([[list(cell) for cell in row] for row in cells], dtype='<U1'))

    @classmethod
    def constant(cls, size: int, char: str) -> 'StringMatrix':
        """Depth-1 matrix with every cell equal to `char`."""
        return cls(np.full((size, size, 1), char, dtype='<U1'))

    @property
    def size(self) -> int:
        return int(self.chars.shape[0])

    @property
    def depth(self) -> int:
        return int(self.chars.shape[2])

    def layer(self, index: int) -> Layer:
        return Layer(self.chars[:, :, index])

    def cells(self) -> List[List[str]]:
        """Cell strings, row by row."""
        return [["".join(cell) for cell in row] for row in self.chars]

    def __eq__(self, other) -> bool:
        if not isinstance(other, StringMatrix):
            return NotImplemented
        return self.chars.shape == other.chars.shape and bool(np.array_equal(self.chars, other.chars))

    def __hash__(self) -> int:
        return hash((self.chars.shape, self.chars.tobytes()))

    def __repr__(self) -> str:
        return f"StringMatrix({' / '.join(' '.join(row) for row in self.cells())})"
