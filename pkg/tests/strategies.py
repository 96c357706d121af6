"""Hypothesis strategies for images and string matrices."""

import numpy as np
from hypothesis import strategies as st

from alm_morph.models.image import BinaryImage, TriValuedMask
from alm_morph.models.matrix import StringMatrix


def binary_images(min_side=1, max_side=8):
    """Random binary images of any shape within the bounds."""
    def build(shape):
        height, width = shape
        return st.lists(st.integers(0, 1), min_size=height * width, max_size=height * width).map(
            lambda bits: BinaryImage(np.array(bits).reshape(height, width))
        )
    sides = st.integers(min_side, max_side)
    return st.tuples(sides, sides).flatmap(build)


def string_matrices(min_size=1, max_size=6, alphabet='01'):
    """Depth-1 square string matrices."""
    def build(size):
        return st.lists(st.sampled_from(alphabet), min_size=size * size, max_size=size * size).map(
            lambda chars: StringMatrix(np.array(chars, dtype='<U1').reshape(size, size, 1))
        )
    return st.integers(min_size, max_size).flatmap(build)


def tri_valued_masks(max_size=3):
    """Square masks over FG (1), BG (0) and DC (-1) with the default anchor."""
    def build(size):
        return st.lists(st.sampled_from([-1, 0, 1]), min_size=size * size, max_size=size * size).map(
            lambda cells: TriValuedMask(np.array(cells).reshape(size, size))
        )
    return st.integers(1, max_size).flatmap(build)
