"""Tests for Extended Thinning, Extended Thickening and the reference norms."""

import numpy as np
import pytest
from hypothesis import assume, given, settings

from alm_morph.exceptions import ChainTooLargeError
from alm_morph.extended_norms import (
    NEUTRAL, SizeOrder, chain_thicken, chain_thin, complement_layer, complement_sm, ext_thicken,
    ext_thin, max_by_size, min_by_size, thicken_layer, thin_layer,
)
from alm_morph.models.image import BinaryImage
from alm_morph.models.matrix import Layer, StringMatrix
from alm_morph.morphology import thicken_once, thin_once
from alm_morph.string_matrix import l_prime, layers, left, pad_to_square, save
from tests.strategies import string_matrices


def sm(rows):
    return StringMatrix.from_cells([row.split() for row in rows])


def random_layer(rng, size):
    return Layer(np.where(rng.random((size, size)) < 0.5, '1', '0'))


def random_chain(rng, size, depth):
    return StringMatrix(np.where(rng.random((size, size, depth)) < 0.5, '1', '0'))


def test_equal_sizes_give_constants():
    """Test equal-size operands short-circuit to constant matrices."""
    a = sm(["0 1 1", "1 0 0", "0 1 0"])
    b = sm(["1 1 1", "0 0 0", "1 1 1"])
    assert ext_thin(a, b) == StringMatrix.constant(3, '0')
    assert ext_thicken(a, b) == StringMatrix.constant(3, '1')


def test_thin_by_neutral_zero_keeps_left_and_records_history():
    """Test A ⊗ [0] keeps A on the numeric layer and saves both operands."""
    a = sm(["0 1 1", "1 1 0", "0 1 0"])
    result = ext_thin(a, NEUTRAL.zero)
    assert left(result) == left(a)
    assert result.depth == 3
    stack = layers(result)
    assert stack[1] == left(a)
    assert stack[2] == Layer.from_rows(["0**", "***", "***"])


def test_thicken_by_neutral_one_keeps_left():
    """Test A ⊙ [1] keeps A on the numeric layer."""
    a = sm(["0 1 1", "1 1 0", "0 1 0"])
    assert left(ext_thicken(a, NEUTRAL.one)) == left(a)
    assert left(ext_thicken(NEUTRAL.one, a)) == left(a)


def test_thin_by_bg_anchored_mask_changes_nothing():
    """Test a 2x2 mask anchored on a BG cell thins nothing."""
    a = sm(["0 0 1", "1 0 0", "0 0 0"])
    b = sm(["0 1", "1 0"])
    result = ext_thin(a, b)
    assert left(result) == chain_thin(left(a), l_prime(b))
    assert left(result) == left(a)


def test_thin_by_full_block():
    """Test a 2x2 all-FG mask removes the bottom-right cell of a 2x2 block."""
    a = sm(["1 1 0", "1 1 0", "0 0 0"])
    b = sm(["1 1", "1 1"])
    assert left(ext_thin(a, b)) == Layer.from_rows(["110", "100", "000"])


def test_result_layout_for_unequal_sizes():
    """Test the result is Save(numeric, Save(L'(A), L'(B)))."""
    a = sm(["01 10 11", "00 11 10", "10 01 01"])
    b = sm(["1 0", "0 1"])
    result = ext_thin(a, b)
    assert result.size == 3
    assert result.depth == 1 + l_prime(a).depth + l_prime(b).depth
    expected_history = save(l_prime(a), l_prime(b))
    assert StringMatrix(result.chars[:, :, 1:]) == expected_history


def test_chain_matches_fold_of_single_steps(rng):
    """Test chain thinning and thickening equal folding the single-mask steps."""
    for _ in range(20):
        base = random_layer(rng, 9)
        chain = random_chain(rng, int(rng.integers(1, 5)), 3)
        thinned = BinaryImage(base.ones.astype(int))
        thickened = BinaryImage(base.ones.astype(int))
        for layer in layers(chain):
            thinned = thin_once(thinned, layer.to_mask())
            thickened = thicken_once(thickened, layer.to_mask())
        assert chain_thin(base, chain) == Layer.from_image(thinned)
        assert chain_thicken(base, chain) == Layer.from_image(thickened)


def test_single_layer_chain_is_one_step(rng):
    """Test a depth-1 chain applies exactly one step."""
    base = random_layer(rng, 6)
    mask_layer = random_layer(rng, 3)
    assert chain_thin(base, mask_layer.to_matrix()) == thin_layer(base, mask_layer)
    assert chain_thicken(base, mask_layer.to_matrix()) == thicken_layer(base, mask_layer)


def test_chain_larger_than_base():
    """Test a chain larger than its base is rejected."""
    with pytest.raises(ChainTooLargeError):
        chain_thin(Layer.from_rows(["01", "10"]), StringMatrix.constant(3, '1'))


def test_dont_care_cells_are_never_changed():
    """Test '*' cells of a base layer survive thinning and thickening."""
    base = Layer.from_rows(["1*1", "***", "1*1"])
    everything = Layer.from_rows(["*"])
    assert thin_layer(base, Layer.from_rows(["1"])) == Layer.from_rows(["0*0", "***", "0*0"])
    assert thicken_layer(base, everything) == base
    assert thin_layer(base, everything) == Layer.from_rows(["0*0", "***", "0*0"])


def test_complement():
    """Test characterwise complement."""
    assert complement_sm(sm(["0"])) == sm(["1"])
    assert complement_sm(sm(["01* 1**", "000 111"])) == sm(["10* 0**", "111 000"])
    assert complement_layer(Layer.from_rows(["0*", "1*"])) == Layer.from_rows(["1*", "0*"])


def test_reference_norms():
    """Test cellwise max and min over the padded frame."""
    a = sm(["0 1", "1 0"])
    b = sm(["1"])
    assert max_by_size(a, b) == sm(["1 1", "1 0"])
    assert min_by_size(a, b) == a
    assert min_by_size(a, sm(["0"])) == sm(["0 1", "1 0"])
    with pytest.raises(ValueError):
        max_by_size(sm(["01"]), b)


def test_size_order():
    """Test matrices compare by size alone."""
    small = SizeOrder(StringMatrix.constant(2, '1'))
    large = SizeOrder(StringMatrix.constant(4, '0'))
    assert small < large
    assert SizeOrder(StringMatrix.constant(2, '0')) == small
    assert small <= SizeOrder(StringMatrix.constant(2, '0'))


@settings(max_examples=100, deadline=None)
@given(string_matrices(max_size=7), string_matrices(max_size=7))
def test_commutativity(a, b):
    """Test both extended operators commute cell for cell."""
    assert ext_thin(a, b) == ext_thin(b, a)
    assert ext_thicken(a, b) == ext_thicken(b, a)


@settings(max_examples=100, deadline=None)
@given(string_matrices(min_size=2, max_size=7))
def test_neutrality(a):
    """Test [0] and [1] are neutral on the numeric layer."""
    assert left(ext_thin(a, NEUTRAL.zero)) == left(a)
    assert left(ext_thicken(a, NEUTRAL.one)) == left(a)


@settings(max_examples=100, deadline=None)
@given(string_matrices(max_size=7), string_matrices(max_size=7))
def test_demorgan_on_left_projection(a, b):
    """Test (A^c ⊗ B^c)^c and A ⊙ B agree on the numeric layer."""
    assume(a.size != b.size)
    lhs = complement_sm(ext_thin(complement_sm(a), complement_sm(b)))
    assert left(lhs) == left(ext_thicken(a, b))


def test_rectangular_operands_are_padded():
    """Test non-square inputs are padded before use."""
    result = ext_thin([["1", "1", "1"], ["1", "1", "1"]], [["0"]])
    assert left(result) == Layer.from_rows(["111", "111", "***"])
    assert left(result) == left(pad_to_square([["1", "1", "1"], ["1", "1", "1"]]))
