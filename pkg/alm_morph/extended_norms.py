"""
Extended Thinning and Extended Thickening over string matrices.

The numeric layer of a result is the left layer of the larger operand,
thinned (or thickened) by the layers of L' of the smaller operand applied
one after another as structuring elements. The remaining layers record the
operands' history through Save.
"""

from dataclasses import dataclass
from functools import total_ordering
from typing import Sequence, Union

import numpy as np

from .exceptions import ChainTooLargeError
from .models.matrix import Layer, StringMatrix
from .morphology import match_mask
from .string_matrix import from_layers, l_prime, layers, left, pad_matrix, pad_to_square, save

MatrixLike = Union[StringMatrix, Sequence[Sequence[str]]]


@total_ordering
@dataclass(frozen=True)
class SizeOrder:
    """Orders string matrices by size alone: any 4x4 matrix exceeds any 2x2."""
    matrix: StringMatrix

    def __eq__(self, other) -> bool:
        if not isinstance(other, SizeOrder):
            return NotImplemented
        return self.matrix.size == other.matrix.size

    def __lt__(self, other) -> bool:
        if not isinstance(other, SizeOrder):
            return NotImplemented
        return self.matrix.size < other.matrix.size

    def __hash__(self) -> int:
        return hash(self.matrix.size)


@dataclass(frozen=True)
class NeutralElements:
    """1x1 neutral elements of the extended operators."""
    zero: StringMatrix = StringMatrix.constant(1, '0')
    one: StringMatrix = StringMatrix.constant(1, '1')


NEUTRAL = NeutralElements()


def thin_layer(base: Layer, mask_layer: Layer) -> Layer:
    """
    One thinning step of a layer by a layer read as a structuring element.

    '*' cells of the base match neither FG nor BG and are never changed.
    """
    ones, zeros = base.ones, base.zeros
    hits = match_mask(ones, zeros, mask_layer.to_mask())
    chars = base.chars.copy()
    chars[hits & ones] = '0'
    return Layer(chars)


def thicken_layer(base: Layer, mask_layer: Layer) -> Layer:
    """One thickening step; mirror of thin_layer."""
    ones, zeros = base.ones, base.zeros
    hits = match_mask(ones, zeros, mask_layer.to_mask())
    chars = base.chars.copy()
    chars[hits & zeros] = '1'
    return Layer(chars)


def _check_chain(base: Layer, chain: StringMatrix) -> None:
    if chain.size > base.size:
        raise ChainTooLargeError(
            f"chain of size {chain.size} cannot be applied to a layer of size {base.size}"
        )


def chain_thin(base: Layer, chain: StringMatrix) -> Layer:
    """A ⊗ L'(B): thin by every layer of the chain in order, one pass per layer."""
    _check_chain(base, chain)
    for mask_layer in layers(chain):
        base = thin_layer(base, mask_layer)
    return base


def chain_thicken(base: Layer, chain: StringMatrix) -> Layer:
    """A ⊙ L'(B): thicken by every layer of the chain in order."""
    _check_chain(base, chain)
    for mask_layer in layers(chain):
        base = thicken_layer(base, mask_layer)
    return base


def _extended(a: MatrixLike, b: MatrixLike, constant: str, chain_op) -> StringMatrix:
    a, b = pad_to_square(a), pad_to_square(b)
    if a.size == b.size:
        return StringMatrix.constant(a.size, constant)
    greater, smaller = (a, b) if a.size > b.size else (b, a)
    numeric = chain_op(left(greater), l_prime(smaller))
    history = save(l_prime(a), l_prime(b))
    return save(numeric.to_matrix(), history)


def ext_thin(a: MatrixLike, b: MatrixLike) -> StringMatrix:
    """
    Extended Thinning.

    Equal sizes give the all-"0" depth-1 matrix of that size. Otherwise
    Save(L(G) ⊗ L'(S), Save(L'(A), L'(B))) where G is the larger operand
    and S the smaller.
    """
    return _extended(a, b, '0', chain_thin)


def ext_thicken(a: MatrixLike, b: MatrixLike) -> StringMatrix:
    """Extended Thickening; the equal-size branch gives the all-"1" matrix."""
    return _extended(a, b, '1', chain_thicken)


def complement_layer(layer: Layer) -> Layer:
    """'0' <-> '1', '*' fixed."""
    chars = layer.chars
    return Layer(np.where(chars == '0', '1', np.where(chars == '1', '0', chars)))


def complement_sm(matrix: StringMatrix) -> StringMatrix:
    """Characterwise complement, applied layer by layer."""
    return from_layers([complement_layer(layer) for layer in layers(matrix)])


# Cellwise orders for the reference norms: padding is the identity of each.
_MAX_RANK = {'*': 0, '0': 1, '1': 2}
_MIN_RANK = {'0': 0, '1': 1, '*': 2}


def _reference(a: MatrixLike, b: MatrixLike, rank, pick) -> StringMatrix:
    a, b = pad_to_square(a), pad_to_square(b)
    if a.depth != 1 or b.depth != 1:
        raise ValueError("reference norms are defined on depth-1 matrices")
    size = max(a.size, b.size)
    x, y = pad_matrix(a, size).chars, pad_matrix(b, size).chars
    to_rank = np.vectorize(rank.get, otypes=[np.int64])
    take_x = pick(to_rank(x), to_rank(y))
    return StringMatrix(np.where(take_x, x, y))


def max_by_size(a: MatrixLike, b: MatrixLike) -> StringMatrix:
    """Reference S-norm: cellwise max over the common padded frame, '*' lowest."""
    return _reference(a, b, _MAX_RANK, np.greater_equal)


def min_by_size(a: MatrixLike, b: MatrixLike) -> StringMatrix:
    """Reference T-norm: cellwise min over the common padded frame, '*' highest."""
    return _reference(a, b, _MIN_RANK, np.less_equal)
