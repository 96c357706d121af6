"""Binary image and tri-valued structuring element models."""

from enum import IntEnum
from typing import List, Optional, Sequence, Tuple
from dataclasses import dataclass, field

import numpy as np


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class BinaryImage:
    """Rectangular 0/1 grid, row-major with top-left origin."""
    cells: np.ndarray

    def __post_init__(self):
        """Validate and freeze the grid."""
        cells = np.array(self.cells, dtype=np.int64)
        if cells.ndim != 2:
            raise ValueError(f"BinaryImage must be 2-dimensional, got {cells.ndim} dimensions")
        if cells.shape[0] < 1 or cells.shape[1] < 1:
            raise ValueError(f"BinaryImage must be at least 1x1, got {cells.shape}")
        if not np.isin(cells, (0, 1)).all():
            raise ValueError("BinaryImage cells must be 0 or 1")
        object.__setattr__(self, 'cells', _frozen(cells.astype(np.uint8)))

    @classmethod
    def zeros(cls, width: int, height: int) -> 'BinaryImage':
        """Empty image of the given size."""
        return cls(np.zeros((height, width), dtype=np.uint8))

    @classmethod
    def from_bool(cls, mask: np.ndarray) -> 'BinaryImage':
        """Wrap a boolean array."""
        return cls(np.asarray(mask, dtype=bool).astype(np.uint8))

    @property
    def width(self) -> int:
        return int(self.cells.shape[1])

    @property
    def height(self) -> int:
        return int(self.cells.shape[0])

    @property
    def foreground(self) -> np.ndarray:
        """Boolean view of the 1-cells."""
        return self.cells.astype(bool)

    def count(self) -> int:
        """Number of foreground cells."""
        return int(self.cells.sum())

    def is_empty(self) -> bool:
        return self.count() == 0

    def issubset(self, other: 'BinaryImage') -> bool:
        """Cellwise inclusion of foreground sets."""
        if self.cells.shape != other.cells.shape:
            return False
        return bool(np.all(self.cells <= other.cells))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryImage):
            return NotImplemented
        return self.cells.shape == other.cells.shape and bool(np.array_equal(self.cells, other.cells))

    def __hash__(self) -> int:
        return hash((self.cells.shape, self.cells.tobytes()))

    def __repr__(self) -> str:
        rows = ["".join(str(v) for v in row) for row in self.cells]
        return f"BinaryImage({self.width}x{self.height}: {'/'.join(rows)})"


class MaskCell(IntEnum):
    """Structuring element cell kinds."""
    DC = -1  # don't care
    BG = 0
    FG = 1


MASK_SYMBOLS = {'1': MaskCell.FG, '0': MaskCell.BG, '*': MaskCell.DC}


@dataclass(frozen=True, eq=False)
class TriValuedMask:
    """
    Square structuring element B = (B1, B2).

    FG cells form B1, BG cells form B2, DC cells belong to neither.
    """
    cells: np.ndarray
    anchor: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        """Validate shape, cell kinds and anchor."""
        cells = np.array(self.cells, dtype=np.int64)
        if cells.ndim != 2 or cells.shape[0] != cells.shape[1] or cells.shape[0] < 1:
            raise ValueError(f"TriValuedMask must be a non-empty square grid, got shape {cells.shape}")
        if not np.isin(cells, (-1, 0, 1)).all():
            raise ValueError("TriValuedMask cells must be FG (1), BG (0) or DC (-1)")
        n = cells.shape[0]
        anchor = self.anchor if self.anchor is not None else (n // 2, n // 2)
        anchor = (int(anchor[0]), int(anchor[1]))
        if not (0 <= anchor[0] < n and 0 <= anchor[1] < n):
            raise ValueError(f"anchor {anchor} outside a {n}x{n} mask")
        object.__setattr__(self, 'cells', _frozen(cells.astype(np.int8)))
        object.__setattr__(self, 'anchor', anchor)

    @classmethod
    def from_rows(cls, rows: Sequence[str], anchor: Optional[Tuple[int, int]] = None) -> 'TriValuedMask':
        """
        Build a mask from text rows over {'1', '0', '*'}.

        Whitespace inside a row is ignored, so "1 0 *" and "10*" are the same row.
        """
        grid = []
        for row in rows:
            symbols = "".join(row.split())
            try:
                grid.append([MASK_SYMBOLS[s] for s in symbols])
            except KeyError as e:
                raise ValueError(f"Invalid mask symbol {e.args[0]!r} in row {row!r}") from e
        return cls(np.array(grid, dtype=np.int64), anchor)

    @classmethod
    def single(cls, kind: MaskCell) -> 'TriValuedMask':
        """1x1 mask of one cell kind."""
        return cls(np.array([[int(kind)]]))

    @property
    def size(self) -> int:
        return int(self.cells.shape[0])

    @property
    def hit_cells(self) -> np.ndarray:
        """B1 as a boolean grid."""
        return self.cells == MaskCell.FG

    @property
    def miss_cells(self) -> np.ndarray:
        """B2 as a boolean grid."""
        return self.cells == MaskCell.BG

    def to_rows(self) -> List[str]:
        symbols = {int(v): k for k, v in MASK_SYMBOLS.items()}
        return ["".join(symbols[int(v)] for v in row) for row in self.cells]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TriValuedMask):
            return NotImplemented
        return self.anchor == other.anchor and bool(np.array_equal(self.cells, other.cells))

    def __hash__(self) -> int:
        return hash((self.anchor, self.cells.tobytes()))

    def __repr__(self) -> str:
        return f"TriValuedMask({'/'.join(self.to_rows())}, anchor={self.anchor})"


# Outer ring of a 3x3 grid, clockwise from the top-left corner.
_RING = [(0, 0), (0, 1), (0, 2), (1, 2), (2, 2), (2, 1), (2, 0), (1, 0)]


def rotate_mask_45(mask: TriValuedMask) -> TriValuedMask:
    """Rotate a 3x3 mask by 45 degrees clockwise (outer ring shifted one step)."""
    if mask.size != 3:
        raise ValueError(f"45-degree rotation is defined for 3x3 masks, got {mask.size}x{mask.size}")
    rotated = mask.cells.astype(np.int64).copy()
    for i, (r, c) in enumerate(_RING):
        src_r, src_c = _RING[i - 1]
        rotated[r, c] = mask.cells[src_r, src_c]
    return TriValuedMask(rotated, mask.anchor)


@dataclass(frozen=True)
class MaskOctet:
    """Eight structuring elements, each the 45-degree rotation of its predecessor."""
    masks: Tuple[TriValuedMask, ...] = field(default_factory=tuple)

    def __post_init__(self):
        """Validate count and rotation chain."""
        masks = tuple(self.masks)
        if len(masks) != 8:
            raise ValueError(f"MaskOctet needs exactly 8 masks, got {len(masks)}")
        for i in range(1, 8):
            if rotate_mask_45(masks[i - 1]) != masks[i]:
                raise ValueError(f"Mask {i + 1} is not the 45-degree rotation of mask {i}")
        object.__setattr__(self, 'masks', masks)

    @classmethod
    def from_base(cls, base: TriValuedMask) -> 'MaskOctet':
        """Generate the octet from its first mask."""
        masks = [base]
        for _ in range(7):
            masks.append(rotate_mask_45(masks[-1]))
        return cls(tuple(masks))

    def complemented(self) -> 'MaskOctet':
        """Octet with FG and BG interchanged in every mask."""
        return MaskOctet(tuple(complement_cells(m) for m in self.masks))

    @property
    def radius(self) -> int:
        return self.masks[0].size // 2

    def __iter__(self):
        return iter(self.masks)

    def __len__(self) -> int:
        return len(self.masks)


def complement_cells(mask: TriValuedMask) -> TriValuedMask:
    """FG and BG swapped, DC and anchor kept."""
    cells = mask.cells.astype(np.int64)
    swapped = np.where(cells == int(MaskCell.DC), int(MaskCell.DC), 1 - cells)
    return TriValuedMask(swapped, mask.anchor)


THINNING_BASE_ROWS = ("000", "*1*", "111")


def default_thinning_octet() -> MaskOctet:
    """The standard eight-element thinning sequence."""
    return MaskOctet.from_base(TriValuedMask.from_rows(THINNING_BASE_ROWS))


def default_thickening_octet() -> MaskOctet:
    """Thinning octet with ones and zeros interchanged."""
    return default_thinning_octet().complemented()
