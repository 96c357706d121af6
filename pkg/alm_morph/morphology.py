"""
Binary morphology: hit-or-miss, thinning, thickening and their duality.

A mask is only evaluated at anchor positions where it lies entirely inside the
frame; every other position produces 0. Under this convention the hit-or-miss
of complemented operands equals the original one cell for cell, so thinning
and thickening are exact duals on finite grids.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy import ndimage

from .exceptions import NonConvergenceError
from .models.image import BinaryImage, MaskOctet, TriValuedMask, complement_cells

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConvergenceResult:
    """Outcome of an iterated pass sequence."""
    image: BinaryImage
    passes: int
    converged: bool


def _origin(mask: TriValuedMask) -> Tuple[int, int]:
    """ndimage origin that puts the filter center on the mask anchor."""
    half = mask.size // 2
    return mask.anchor[0] - half, mask.anchor[1] - half


def _fits(shape: Tuple[int, int], mask: TriValuedMask) -> np.ndarray:
    """Anchor positions at which the whole mask lies inside the frame."""
    height, width = shape
    n = mask.size
    window = np.zeros((height, width), dtype=bool)
    if n > height or n > width:
        return window
    row, col = mask.anchor
    window[row:row + height - n + 1, col:col + width - n + 1] = True
    return window


def match_mask(ones: np.ndarray, zeros: np.ndarray, mask: TriValuedMask) -> np.ndarray:
    """
    Hit-or-miss on a pair of indicator planes.

    `ones` marks cells that satisfy FG requirements and `zeros` cells that
    satisfy BG requirements. For a binary image the two are complementary;
    a don't-care cell ('*') in a string-matrix layer is in neither.

    Returns:
        Boolean grid of the input shape, True where the mask anchored there
        fits inside the frame and matches.
    """
    hits = _fits(ones.shape, mask)
    if not hits.any():
        return hits

    origin = _origin(mask)
    fg = mask.hit_cells
    bg = mask.miss_cells
    if fg.any():
        hits &= ndimage.binary_erosion(ones, structure=fg, origin=origin, border_value=0)
    if bg.any():
        hits &= ndimage.binary_erosion(zeros, structure=bg, origin=origin, border_value=0)
    return hits


def complement(img: BinaryImage) -> BinaryImage:
    """Frame-local complement A^c."""
    return BinaryImage(1 - img.cells)


def complement_mask(mask: TriValuedMask) -> TriValuedMask:
    """Interchange FG and BG; DC cells and the anchor are kept."""
    return complement_cells(mask)


def hit_or_miss(img: BinaryImage, mask: TriValuedMask) -> BinaryImage:
    """A ⊛ B = (A ⊖ B1) ∩ (A^c ⊖ B2), restricted to fully fitting positions."""
    fg = img.foreground
    return BinaryImage.from_bool(match_mask(fg, ~fg, mask))


def erode(img: BinaryImage, mask: TriValuedMask) -> BinaryImage:
    """Erosion of A by the FG cells of a mask (positions where the mask does not fit yield 0)."""
    hits = _fits(img.cells.shape, mask)
    if hits.any() and mask.hit_cells.any():
        hits &= ndimage.binary_erosion(img.foreground, structure=mask.hit_cells,
                                       origin=_origin(mask), border_value=0)
    return BinaryImage.from_bool(hits)


def dilate(img: BinaryImage, mask: TriValuedMask) -> BinaryImage:
    """
    Dilation of A by the FG cells of a mask.

    A cell z is set when the reflected mask translated to z meets A.
    """
    if not mask.hit_cells.any():
        return BinaryImage.zeros(img.width, img.height)
    grown = ndimage.binary_dilation(img.foreground, structure=mask.hit_cells,
                                    origin=_origin(mask), border_value=0)
    return BinaryImage.from_bool(grown)


def thin_once(img: BinaryImage, mask: TriValuedMask) -> BinaryImage:
    """A ⊗ B = A − (A ⊛ B)."""
    fg = img.foreground
    return BinaryImage.from_bool(fg & ~match_mask(fg, ~fg, mask))


def thicken_once(img: BinaryImage, mask: TriValuedMask) -> BinaryImage:
    """A ⊙ B = A ∪ (A ⊛ B)."""
    fg = img.foreground
    return BinaryImage.from_bool(fg | match_mask(fg, ~fg, mask))


def thin_pass(img: BinaryImage, octet: MaskOctet) -> BinaryImage:
    """Thin sequentially by every mask of the octet, in order."""
    for mask in octet:
        img = thin_once(img, mask)
    return img


def thicken_pass(img: BinaryImage, octet: MaskOctet) -> BinaryImage:
    """Thicken sequentially by every mask of the octet, in order."""
    for mask in octet:
        img = thicken_once(img, mask)
    return img


def _iterate(img: BinaryImage, octet: MaskOctet, step, max_passes: Optional[int]) -> ConvergenceResult:
    if max_passes is None:
        max_passes = img.width + img.height
    if max_passes < 1:
        raise ValueError(f"max_passes must be >= 1, got {max_passes}")

    current = img
    for passes in range(1, max_passes + 1):
        following = step(current, octet)
        logger.debug("pass %d: %d -> %d foreground cells", passes, current.count(), following.count())
        if following == current:
            return ConvergenceResult(following, passes, True)
        current = following
    return ConvergenceResult(current, max_passes, False)


def thin_until_stable(img: BinaryImage, octet: MaskOctet,
                      max_passes: Optional[int] = None) -> ConvergenceResult:
    """Repeat thin_pass until a pass changes nothing or the cap is reached."""
    return _iterate(img, octet, thin_pass, max_passes)


def thicken_until_stable(img: BinaryImage, octet: MaskOctet,
                         max_passes: Optional[int] = None) -> ConvergenceResult:
    """Repeat thicken_pass until a pass adds nothing or the cap is reached."""
    return _iterate(img, octet, thicken_pass, max_passes)


def thin_to_convergence(img: BinaryImage, octet: MaskOctet,
                        max_passes: Optional[int] = None) -> BinaryImage:
    """
    Thin to a fixed point.

    Args:
        img: Image to thin
        octet: Thinning octet
        max_passes: Pass cap, default width + height

    Returns:
        The fixed point

    Raises:
        NonConvergenceError: If the cap is exhausted; `.result` holds the last iterate
    """
    result = thin_until_stable(img, octet, max_passes)
    if not result.converged:
        raise NonConvergenceError(f"thinning did not converge within {result.passes} passes", result)
    logger.debug("thinning converged after %d passes", result.passes)
    return result.image


def thicken_to_convergence(img: BinaryImage, octet: MaskOctet,
                           max_passes: Optional[int] = None) -> BinaryImage:
    """Thicken to a fixed point; mirror of thin_to_convergence."""
    result = thicken_until_stable(img, octet, max_passes)
    if not result.converged:
        raise NonConvergenceError(f"thickening did not converge within {result.passes} passes", result)
    logger.debug("thickening converged after %d passes", result.passes)
    return result.image


def check_duality(img: BinaryImage, mask: TriValuedMask) -> Tuple[bool, bool]:
    """
    Check (A^c ⊗ B^c)^c = A ⊙ B and (A^c ⊙ B^c)^c = A ⊗ B cell-exactly.
    """
    img_c = complement(img)
    mask_c = complement_mask(mask)
    thickening_dual = complement(thin_once(img_c, mask_c)) == thicken_once(img, mask)
    thinning_dual = complement(thicken_once(img_c, mask_c)) == thin_once(img, mask)
    return thickening_dual, thinning_dual


def random_image(rng: np.random.Generator, width: int, height: int, p_one: float = 0.5) -> BinaryImage:
    """I.i.d. Bernoulli image."""
    return BinaryImage((rng.random((height, width)) < p_one).astype(np.uint8))
