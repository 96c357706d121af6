"""
Block text formats for masks, octets and string matrices.

One item per block, blocks separated by blank lines, '#' starts a comment.
Masks are rows of '1' (FG), '0' (BG) and '*' (DC). String matrices are rows
of whitespace-separated cell strings; rectangular blocks are padded square.
"""

from pathlib import Path
from typing import Iterable, List, Sequence, Tuple, Union

from ..exceptions import FormatError, NonUniformDepthError
from ..models.image import BinaryImage, MaskOctet, TriValuedMask
from ..models.matrix import StringMatrix
from ..string_matrix import pad_to_square

PathLike = Union[str, Path]


def split_blocks(text: str) -> List[List[str]]:
    """Non-empty lines grouped into blank-line separated blocks."""
    blocks, current = [], []
    for line in text.splitlines():
        line = line.split('#', 1)[0].strip()
        if line:
            current.append(line)
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)
    return blocks


def _read_blocks(path: PathLike) -> List[List[str]]:
    path = Path(path)
    try:
        return split_blocks(path.read_text())
    except (OSError, UnicodeDecodeError) as e:
        raise FormatError(f"{path}: cannot read: {e}") from e


def format_mask(mask: TriValuedMask) -> str:
    return "\n".join(mask.to_rows())


def read_masks(path: PathLike) -> List[TriValuedMask]:
    """
    Raises:
        FormatError: If a block is not a square grid over '1', '0', '*'
    """
    masks = []
    for i, block in enumerate(_read_blocks(path), start=1):
        try:
            masks.append(TriValuedMask.from_rows(block))
        except ValueError as e:
            raise FormatError(f"{path}: mask block {i}: {e}") from e
    return masks


def write_masks(path: PathLike, masks: Iterable[TriValuedMask]) -> Path:
    path = Path(path)
    path.write_text("\n\n".join(format_mask(m) for m in masks) + "\n")
    return path


def read_octet_pair(path: PathLike) -> Tuple[MaskOctet, MaskOctet]:
    """
    Thinning and thickening octets from a mask file.

    A single 3x3 block is rotated into an octet; 8 blocks form the thinning
    octet; 16 blocks give thinning then thickening. Without an explicit
    thickening octet it is the complemented thinning octet.

    Raises:
        FormatError: On a wrong block count or a broken rotation chain
    """
    masks = read_masks(path)
    try:
        if len(masks) == 1:
            thinning = MaskOctet.from_base(masks[0])
            return thinning, thinning.complemented()
        if len(masks) == 8:
            thinning = MaskOctet(tuple(masks))
            return thinning, thinning.complemented()
        if len(masks) == 16:
            return MaskOctet(tuple(masks[:8])), MaskOctet(tuple(masks[8:]))
    except ValueError as e:
        raise FormatError(f"{path}: {e}") from e
    raise FormatError(f"{path}: expected 1, 8 or 16 mask blocks, found {len(masks)}")


def parse_matrix(lines: Sequence[str]) -> StringMatrix:
    """
    Raises:
        FormatError: If the block is ragged, mixes depths or uses other characters
    """
    try:
        return pad_to_square([line.split() for line in lines])
    except (ValueError, NonUniformDepthError) as e:
        raise FormatError(str(e)) from e


def format_matrix(matrix: StringMatrix) -> str:
    return "\n".join(" ".join(row) for row in matrix.cells())


def read_matrices(path: PathLike) -> List[StringMatrix]:
    matrices = []
    for i, block in enumerate(_read_blocks(path), start=1):
        try:
            matrices.append(parse_matrix(block))
        except FormatError as e:
            raise FormatError(f"{path}: matrix block {i}: {e}") from e
    return matrices


def write_matrices(path: PathLike, matrices: Iterable[StringMatrix]) -> Path:
    path = Path(path)
    path.write_text("\n\n".join(format_matrix(m) for m in matrices) + "\n")
    return path


def format_image(img: BinaryImage) -> str:
    return "\n".join("".join(str(v) for v in row) for row in img.cells)


def format_operand(operand) -> str:
    """Text form of one counterexample operand."""
    if isinstance(operand, StringMatrix):
        return format_matrix(operand)
    if isinstance(operand, TriValuedMask):
        return format_mask(operand)
    if isinstance(operand, BinaryImage):
        return format_image(operand)
    if isinstance(operand, tuple):
        return "(" + ", ".join(repr(float(v)) for v in operand) + ")"
    return repr(float(operand))
