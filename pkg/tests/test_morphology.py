"""Tests for hit-or-miss, thinning, thickening and duality."""

import numpy as np
import pytest
from hypothesis import given, settings

from alm_morph.exceptions import NonConvergenceError
from alm_morph.models.image import (
    BinaryImage, MaskCell, MaskOctet, TriValuedMask, rotate_mask_45,
)
from alm_morph.morphology import (
    check_duality, complement, complement_mask, dilate, erode, hit_or_miss, match_mask,
    random_image, thicken_once, thicken_pass, thin_once, thin_pass, thicken_to_convergence,
    thicken_until_stable, thin_to_convergence, thin_until_stable,
)
from tests.strategies import binary_images, tri_valued_masks


def _all_images(side):
    """Every binary image of the given square side, shape (2**(side*side), side, side)."""
    cells = side * side
    codes = np.arange(2 ** cells)[:, None]
    bits = (codes >> np.arange(cells)[None, :]) & 1
    return bits.reshape(-1, side, side).astype(bool)


def _oracle(images, mask):
    """Translate-and-test hit-or-miss for a stack of images."""
    n = mask.size
    _, height, width = images.shape
    out = np.zeros_like(images)
    fg, bg = mask.hit_cells, mask.miss_cells
    row, col = mask.anchor
    for r in range(height - n + 1):
        for c in range(width - n + 1):
            window = images[:, r:r + n, c:c + n]
            out[:, r + row, c + col] = window[:, fg].all(axis=1) & (~window[:, bg]).all(axis=1)
    return out


def _margined(height, width, top, left, bar_h, bar_w):
    cells = np.zeros((height, width), dtype=int)
    cells[top:top + bar_h, left:left + bar_w] = 1
    return BinaryImage(cells)


@pytest.mark.parametrize("side", [3, 4])
def test_hit_or_miss_matches_oracle_exhaustively(side, thinning_octet):
    """Test every image of a small frame against every octet mask."""
    images = _all_images(side)
    for mask in thinning_octet:
        expected = _oracle(images, mask)
        for img, want in zip(images, expected):
            assert np.array_equal(match_mask(img, ~img, mask), want)


def _every_mask(side):
    """All 3**(side*side) tri-valued masks of one size."""
    cells = side * side
    codes = np.arange(3 ** cells)[:, None]
    digits = (codes // 3 ** np.arange(cells)[None, :]) % 3 - 1
    return [TriValuedMask(d.reshape(side, side)) for d in digits]


def test_hit_or_miss_matches_oracle_on_small_and_random_masks(rng):
    """Test every 1x1 and 2x2 mask and random 3x3 masks on random images up to 8x8."""
    masks = _every_mask(1) + _every_mask(2)
    masks += [TriValuedMask(rng.integers(-1, 2, size=(3, 3))) for _ in range(40)]
    images = [random_image(rng, int(rng.integers(1, 9)), int(rng.integers(1, 9))) for _ in range(40)]
    for mask in masks:
        for img in images:
            expected = _oracle(img.foreground[None], mask)[0]
            assert np.array_equal(hit_or_miss(img, mask).foreground, expected)


@settings(max_examples=100, deadline=None)
@given(binary_images(max_side=8), tri_valued_masks())
def test_hit_or_miss_of_complements(img, mask):
    """Test A^c ⊛ B^c = A ⊛ B cell for cell."""
    assert hit_or_miss(complement(img), complement_mask(mask)) == hit_or_miss(img, mask)


def test_hit_or_miss_is_intersection_of_erosions(rng, thinning_octet):
    """Test A ⊛ B = (A ⊖ B1) ∩ (A^c ⊖ B2)."""
    for _ in range(20):
        img = random_image(rng, 12, 9)
        for mask in thinning_octet:
            b2 = TriValuedMask(np.where(mask.miss_cells, 1, -1), mask.anchor)
            b1 = TriValuedMask(np.where(mask.hit_cells, 1, -1), mask.anchor)
            expected = erode(img, b1).foreground & erode(complement(img), b2).foreground
            assert np.array_equal(hit_or_miss(img, mask).foreground, expected)


def test_hit_or_miss_all_dont_care_matches_where_mask_fits():
    """Test an all-DC mask hits exactly the fitting positions."""
    img = BinaryImage(np.zeros((5, 6), dtype=int))
    mask = TriValuedMask.from_rows(["***", "***", "***"])
    hits = hit_or_miss(img, mask).foreground
    assert hits[1:4, 1:5].all()
    assert hits.sum() == 3 * 4


def test_mask_larger_than_image_hits_nothing():
    """Test a mask that cannot fit yields an empty result."""
    img = BinaryImage(np.ones((2, 2), dtype=int))
    mask = TriValuedMask.from_rows(["111", "111", "111"])
    assert hit_or_miss(img, mask).is_empty()


def test_single_bg_mask_never_thins(rng):
    """Test a 1x1 BG mask leaves every image unchanged under thinning."""
    mask = TriValuedMask.single(MaskCell.BG)
    img = random_image(rng, 10, 10)
    assert thin_once(img, mask) == img


def test_single_fg_mask_never_thickens(rng):
    """Test a 1x1 FG mask leaves every image unchanged under thickening."""
    mask = TriValuedMask.single(MaskCell.FG)
    img = random_image(rng, 10, 10)
    assert thicken_once(img, mask) == img


def test_single_fg_mask_thins_everything(rng):
    """Test a 1x1 FG mask removes every foreground cell."""
    img = random_image(rng, 8, 8)
    assert thin_once(img, TriValuedMask.single(MaskCell.FG)).is_empty()


def test_dilate_single_pixel_by_square():
    """Test dilating one pixel by a full 3x3 mask gives a 3x3 block."""
    cells = np.zeros((7, 7), dtype=int)
    cells[3, 3] = 1
    out = dilate(BinaryImage(cells), TriValuedMask.from_rows(["111", "111", "111"]))
    expected = np.zeros((7, 7), dtype=bool)
    expected[2:5, 2:5] = True
    assert np.array_equal(out.foreground, expected)


def test_erode_then_dilate_is_subset(rng):
    """Test the opening of an image is contained in the image."""
    square = TriValuedMask.from_rows(["111", "111", "111"])
    img = random_image(rng, 16, 16, p_one=0.7)
    assert dilate(erode(img, square), square).issubset(img)


def test_duality_on_random_images(rng, thinning_octet):
    """Test both De Morgan dualities of thinning and thickening."""
    for _ in range(100):
        img = random_image(rng, 16, 16)
        for mask in thinning_octet:
            assert check_duality(img, mask) == (True, True)


@settings(max_examples=50, deadline=None)
@given(binary_images(max_side=7))
def test_duality_property(img):
    """Test duality holds for images of any shape, including ones smaller than the mask."""
    for mask in MaskOctet.from_base(TriValuedMask.from_rows(["000", "*1*", "111"])):
        assert check_duality(img, mask) == (True, True)


@settings(max_examples=50, deadline=None)
@given(binary_images(max_side=8))
def test_complement_is_involution(img):
    """Test (A^c)^c = A."""
    assert complement(complement(img)) == img


def test_thin_removes_and_thicken_adds_only(rng, thinning_octet, thickening_octet):
    """Test thinning never adds and thickening never removes cells."""
    img = random_image(rng, 20, 20)
    assert thin_pass(img, thinning_octet).issubset(img)
    assert img.issubset(thicken_pass(img, thickening_octet))


def test_thin_bar_to_single_line(thinning_octet):
    """Test a 3-high bar thins to one pixel per interior column."""
    img = _margined(7, 14, 2, 2, 3, 10)
    skeleton = thin_to_convergence(img, thinning_octet)
    counts = skeleton.cells.sum(axis=0)
    assert (counts[4:10] == 1).all()
    assert skeleton.issubset(img)


def test_filled_square_converges(thinning_octet):
    """Test a filled 7x7 square reaches a stable skeleton within 14 passes."""
    img = _margined(11, 11, 2, 2, 7, 7)
    result = thin_until_stable(img, thinning_octet, max_passes=14)
    assert result.converged
    assert result.passes <= 14
    skeleton = result.image
    assert skeleton.issubset(img)
    assert 0 < skeleton.count() < img.count()
    assert thin_pass(skeleton, thinning_octet) == skeleton


def test_non_convergence_carries_last_iterate(thinning_octet):
    """Test exhausting the pass cap raises with the partial result attached."""
    img = _margined(11, 11, 2, 2, 7, 7)
    with pytest.raises(NonConvergenceError) as excinfo:
        thin_to_convergence(img, thinning_octet, max_passes=1)
    result = excinfo.value.result
    assert result.passes == 1
    assert not result.converged
    assert result.image == thin_pass(img, thinning_octet)


def test_thickening_converges(thickening_octet):
    """Test a bar thickens to a stable superset and a low cap raises."""
    img = _margined(7, 7, 2, 1, 1, 5)
    result = thicken_until_stable(img, thickening_octet, max_passes=60)
    assert result.converged
    assert img.issubset(result.image)
    assert result.image.count() > img.count()
    assert thicken_pass(result.image, thickening_octet) == result.image
    assert thicken_to_convergence(img, thickening_octet, max_passes=60) == result.image
    with pytest.raises(NonConvergenceError):
        thicken_to_convergence(img, thickening_octet, max_passes=1)


def test_thicken_pass_single_pixel_matches_sequential_unions(thickening_octet):
    """Test three passes from one pixel equal repeated A ∪ (A ⊛ B) over the octet."""
    cells = np.zeros((9, 9), dtype=bool)
    cells[4, 4] = True
    expected = cells[None]
    result = BinaryImage.from_bool(cells)
    for _ in range(3):
        for mask in thickening_octet:
            expected = expected | _oracle(expected, mask)
        result = thicken_pass(result, thickening_octet)
    assert np.array_equal(result.foreground, expected[0])


@settings(max_examples=50, deadline=None)
@given(binary_images(max_side=8))
def test_thinning_to_convergence_is_idempotent(img):
    """Test thinning a skeleton to convergence returns it unchanged."""
    octet = MaskOctet.from_base(TriValuedMask.from_rows(["000", "*1*", "111"]))
    cap = img.count() + 1
    skeleton = thin_to_convergence(img, octet, max_passes=cap)
    assert thin_to_convergence(skeleton, octet, max_passes=cap) == skeleton


def test_dilate_follows_anchor():
    """Test dilation by masks anchored off the FG cells shifts by the anchor offset."""
    cells = np.zeros((7, 7), dtype=int)
    cells[3, 3] = 1
    img = BinaryImage(cells)

    block = dilate(img, TriValuedMask.from_rows(["11", "11"])).foreground
    expected = np.zeros((7, 7), dtype=bool)
    expected[2:4, 2:4] = True
    assert np.array_equal(block, expected)

    corner = dilate(img, TriValuedMask.from_rows(["1**", "***", "***"])).foreground
    assert corner.sum() == 1 and corner[2, 2]
    assert dilate(img, TriValuedMask.from_rows(["0*", "**"])).is_empty()


def test_invalid_pass_cap(thinning_octet):
    """Test a pass cap below 1 is rejected."""
    with pytest.raises(ValueError):
        thin_until_stable(BinaryImage.zeros(3, 3), thinning_octet, max_passes=0)


def test_empty_image_is_fixed_point(thinning_octet):
    """Test an empty image converges after one pass."""
    result = thin_until_stable(BinaryImage.zeros(5, 5), thinning_octet)
    assert result.converged
    assert result.passes == 1


def test_rotation_cycles_after_eight_steps():
    """Test eight 45-degree rotations return the original mask."""
    mask = TriValuedMask.from_rows(["000", "*1*", "111"])
    rotated = mask
    for _ in range(8):
        rotated = rotate_mask_45(rotated)
    assert rotated == mask
    assert rotate_mask_45(mask) == TriValuedMask.from_rows(["*00", "110", "11*"])


def test_default_octets(thinning_octet, thickening_octet):
    """Test the default octets are distinct rotations and mutual complements."""
    assert len(set(thinning_octet)) == 8
    for thin_mask, thick_mask in zip(thinning_octet, thickening_octet):
        assert complement_mask(thin_mask) == thick_mask
    assert thinning_octet.radius == 1


def test_octet_rejects_broken_chain():
    """Test an octet whose masks are not successive rotations is rejected."""
    mask = TriValuedMask.from_rows(["000", "*1*", "111"])
    with pytest.raises(ValueError):
        MaskOctet(tuple([mask] * 8))


def test_mask_validation():
    """Test non-square masks, bad symbols and bad anchors are rejected."""
    with pytest.raises(ValueError):
        TriValuedMask.from_rows(["00", "000"])
    with pytest.raises(ValueError):
        TriValuedMask.from_rows(["0x0", "000", "000"])
    with pytest.raises(ValueError):
        TriValuedMask.from_rows(["000", "000", "000"], anchor=(3, 0))


def test_binary_image_validation():
    """Test images must be non-empty 2-D grids of 0 and 1."""
    with pytest.raises(ValueError):
        BinaryImage(np.array([[0, 2]]))
    with pytest.raises(ValueError):
        BinaryImage(np.zeros((0, 3)))
    with pytest.raises(ValueError):
        BinaryImage(np.zeros(4))
