"""
String-matrix algebra: padding, Save, and the L, R, T, L' extractors.

Cells are compared as strings, never as numbers. The empty tail (T(A) for
depth <= 2) is represented by None, and Save treats None as its identity.
"""

from typing import List, Optional, Sequence

import numpy as np

from .exceptions import NonUniformDepthError
from .models.matrix import DONT_CARE, Layer, StringMatrix


def pad_to_square(rows: Sequence[Sequence[str]]) -> StringMatrix:
    """
    Smallest square matrix containing a rectangular grid of cells.

    New cells are '*'-strings of the input depth; original cells keep their
    indices (top-left aligned).

    Raises:
        NonUniformDepthError: If cell lengths differ
        ValueError: If the grid is empty or ragged
    """
    if isinstance(rows, StringMatrix):
        return rows
    if not rows or not rows[0]:
        raise ValueError("cannot pad an empty grid")
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise ValueError("grid rows differ in length")
    depths = {len(cell) for row in rows for cell in row}
    if len(depths) != 1:
        raise NonUniformDepthError(f"cells have differing lengths {sorted(depths)}")
    depth = depths.pop()
    if depth < 1:
        raise NonUniformDepthError("cells must be non-empty strings")

    size = max(len(rows), width)
    chars = np.full((size, size, depth), DONT_CARE, dtype='<U1')
    for r, row in enumerate(rows):
        for c, cell in enumerate(row):
            chars[r, c, :] = list(cell)
    return StringMatrix(chars)


def pad_matrix(matrix: StringMatrix, size: int) -> StringMatrix:
    """Grow a matrix to `size` with '*'-cells appended right and below."""
    if size < matrix.size:
        raise ValueError(f"cannot pad a {matrix.size}x{matrix.size} matrix down to {size}")
    if size == matrix.size:
        return matrix
    chars = np.full((size, size, matrix.depth), DONT_CARE, dtype='<U1')
    chars[:matrix.size, :matrix.size, :] = matrix.chars
    return StringMatrix(chars)


def save(first: Optional[StringMatrix], second: Optional[StringMatrix]) -> Optional[StringMatrix]:
    """
    Save(A, B): characterwise concatenation of the padded operands.

    The larger operand's characters come first; for equal sizes the first
    argument's do. Depth of the result is depth(A) + depth(B).
    """
    if first is None:
        return second
    if second is None:
        return first
    size = max(first.size, second.size)
    leading, trailing = (second, first) if second.size > first.size else (first, second)
    chars = np.concatenate(
        [pad_matrix(leading, size).chars, pad_matrix(trailing, size).chars], axis=2
    )
    return StringMatrix(chars)


def save_all(*matrices: Optional[StringMatrix]) -> Optional[StringMatrix]:
    """n-ary Save as the left fold of the binary one."""
    result = None
    for matrix in matrices:
        result = save(result, matrix)
    return result


def left(matrix: StringMatrix) -> Layer:
    """L(A): first character of every cell."""
    return matrix.layer(0)


def right(matrix: StringMatrix) -> Layer:
    """R(A): last character of every cell."""
    return matrix.layer(matrix.depth - 1)


def tail(matrix: StringMatrix) -> Optional[StringMatrix]:
    """T(A): the middle substring of every cell, or None when depth <= 2."""
    if matrix.depth <= 2:
        return None
    return StringMatrix(matrix.chars[:, :, 1:-1])


def l_prime(matrix: StringMatrix) -> StringMatrix:
    """L'(A) = Save(T(A), R(A)); a depth-1 matrix is its own L'."""
    if matrix.depth == 1:
        return matrix
    return save(tail(matrix), right(matrix).to_matrix())


def layers(matrix: StringMatrix) -> List[Layer]:
    """The depth-many layers, index k holding the k-th character of every cell."""
    return [matrix.layer(k) for k in range(matrix.depth)]


def from_layers(stack: Sequence[Layer]) -> StringMatrix:
    """Inverse of layers(): stack equal-size layers into one matrix."""
    if not stack:
        raise ValueError("need at least one layer")
    return StringMatrix(np.stack([layer.chars for layer in stack], axis=2))
