"""
Active Learning Method modeling flow.

Each input dimension of a MISO dataset is projected onto its own
input-output plane, diffused (Ink Drop Spread or thickening), and reduced to
a narrow path of per-column delegates (Center of Gravity or thinning). The
paths are recombined into a prediction by confidence-weighted averaging.
"""

import logging
from typing import TYPE_CHECKING, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from scipy import ndimage

from .exceptions import EmptyDatasetError, NoDelegateError, ZeroTotalWeightError
from .models.image import BinaryImage, MaskOctet, default_thickening_octet, default_thinning_octet
from .models.plane import DataPlane, Dataset, Delegate, MisoModel, NarrowPath
from .morphology import thicken_pass, thin_to_convergence

if TYPE_CHECKING:
    from .config import RunConfig

logger = logging.getLogger(__name__)


class OctetPair(NamedTuple):
    """Structuring elements for the morphological path."""
    thinning: MaskOctet
    thickening: MaskOctet


def default_octet_pair() -> OctetPair:
    return OctetPair(default_thinning_octet(), default_thickening_octet())


def _value_range(values: np.ndarray) -> Tuple[float, float]:
    lo, hi = float(values.min()), float(values.max())
    if hi == lo:
        # widen a degenerate range by one unit around the value
        return lo - 0.5, hi + 0.5
    return lo, hi


def _bin(values: np.ndarray, value_range: Tuple[float, float], bins: int) -> np.ndarray:
    lo, hi = value_range
    idx = np.floor((values - lo) / (hi - lo) * bins).astype(np.int64)
    return np.clip(idx, 0, bins - 1)


def project(dataset: Dataset, dim_index: int, nx: int, ny: int) -> DataPlane:
    """
    Project one input dimension and the output onto an nx x ny count plane.

    Raises:
        EmptyDatasetError: If the dataset has no samples
    """
    if len(dataset) == 0:
        raise EmptyDatasetError("cannot project an empty dataset")
    if not 0 <= dim_index < dataset.input_dim:
        raise ValueError(f"dim_index must be in [0, {dataset.input_dim}), got {dim_index}")
    if nx < 2 or ny < 2:
        raise ValueError(f"plane needs nx, ny >= 2, got {nx}x{ny}")

    x = dataset.inputs[:, dim_index]
    y = dataset.outputs
    x_range, y_range = _value_range(x), _value_range(y)
    cells = np.zeros((ny, nx), dtype=np.int64)
    np.add.at(cells, (_bin(y, y_range, ny), _bin(x, x_range, nx)), 1)
    return DataPlane(cells, x_range, y_range)


def pyramid_kernel(radius: int, height: int) -> np.ndarray:
    """Integer pyramid: height * (radius + 1 - k) at Chebyshev distance k."""
    offsets = np.arange(-radius, radius + 1)
    distance = np.maximum(np.abs(offsets)[:, None], np.abs(offsets)[None, :])
    return (height * (radius + 1 - distance)).astype(np.int64)


def ids_spread(plane: DataPlane, radius: int, height: int = 1) -> DataPlane:
    """
    Ink Drop Spread: stamp an additive pyramid around every source cell.

    A cell with count c contributes c * height * (radius + 1 - k) to every
    cell at Chebyshev distance k <= radius; stamps are clipped at the frame.
    """
    if radius < 0:
        raise ValueError(f"radius must be non-negative, got {radius}")
    if height < 1:
        raise ValueError(f"height must be positive, got {height}")
    spread = ndimage.convolve(plane.cells, pyramid_kernel(radius, height), mode='constant', cval=0)
    return plane.with_cells(spread)


def ids_merge(first: DataPlane, second: DataPlane) -> DataPlane:
    """Pointwise sum of two diffused planes over the same frame."""
    if (first.cells.shape != second.cells.shape or first.x_range != second.x_range
            or first.y_range != second.y_range):
        raise ValueError("planes must share shape and ranges to be merged")
    return first.with_cells(first.cells + second.cells)


def radius_to_cells(radius_units: float, plane: DataPlane) -> int:
    """Spread radius in data units converted to whole cells along x."""
    width = plane.x_range[1] - plane.x_range[0]
    return int(round(radius_units * plane.nx / width))


def _confidence(plane: DataPlane, columns: Sequence[Sequence[Delegate]]) -> float:
    """1 / (1 + mean mass-weighted variance of y around the nearest delegate)."""
    y_centers = plane.y_centers()
    variances = []
    for ix, column in enumerate(columns):
        mass = plane.cells[:, ix]
        total = mass.sum()
        if not column or total == 0:
            continue
        delegates = np.array([d.y for d in column])
        distance = np.min(np.abs(y_centers[:, None] - delegates[None, :]), axis=1)
        variances.append(float((mass * distance ** 2).sum() / total))
    if not variances:
        return 0.0
    return 1.0 / (1.0 + float(np.mean(variances)))


def cog_extract(plane: DataPlane) -> NarrowPath:
    """Center of Gravity: one mass-weighted mean delegate per nonempty column."""
    y_centers = plane.y_centers()
    columns: List[Tuple[Delegate, ...]] = []
    for ix in range(plane.nx):
        mass = plane.cells[:, ix]
        total = int(mass.sum())
        if total == 0:
            columns.append(())
            continue
        y_star = float((y_centers * mass).sum() / total)
        columns.append((Delegate(y_star, 0, float(total)),))
    confidence = _confidence(plane, columns)
    logger.debug("cog path: %d delegates, confidence %.4f", sum(map(len, columns)), confidence)
    return NarrowPath(tuple(columns), plane.x_range, plane.y_range, confidence)


def cog_merge(a: Tuple[float, float], b: Tuple[float, float]) -> Tuple[float, float]:
    """
    Merge two weighted points (y, w) into their center of gravity.

    Raises:
        ZeroTotalWeightError: If both weights are zero
    """
    (y_a, w_a), (y_b, w_b) = a, b
    if w_a < 0 or w_b < 0:
        raise ValueError(f"weights must be non-negative, got {w_a} and {w_b}")
    total = w_a + w_b
    if total == 0:
        raise ZeroTotalWeightError("cannot merge two points of zero weight")
    return (y_a * w_a + y_b * w_b) / total, total


def binarize(plane: DataPlane, tau: int = 1) -> BinaryImage:
    """Cells with at least tau ink."""
    if tau < 1:
        raise ValueError(f"tau must be >= 1, got {tau}")
    return BinaryImage.from_bool(plane.cells >= tau)


def thicken_plane(plane: DataPlane, tau: int, passes: int,
                  octet: Optional[MaskOctet] = None) -> DataPlane:
    """Binarize and apply `passes` thickening passes; the result holds 0/1 cells."""
    octet = octet or default_thickening_octet()
    img = binarize(plane, tau)
    for _ in range(passes):
        img = thicken_pass(img, octet)
    return plane.with_cells(img.cells)


def _runs(rows: np.ndarray, gap_threshold: int) -> List[np.ndarray]:
    """Split sorted row indices where more than gap_threshold empty rows separate them."""
    if rows.size == 0:
        return []
    breaks = np.nonzero(np.diff(rows) - 1 > gap_threshold)[0] + 1
    return np.split(rows, breaks)


def _run_center(run: np.ndarray) -> int:
    """Member row nearest the run mean; the mean itself may fall in a gap row."""
    return int(run[np.argmin(np.abs(run - run.mean()))])


def morph_extract(plane: DataPlane, tau: int = 1, thicken_passes: int = 1,
                  octet_pair: Optional[OctetPair] = None,
                  gap_threshold: Optional[int] = None,
                  max_passes: Optional[int] = None) -> NarrowPath:
    """
    Narrow path by thickening then thinning to a skeleton.

    Each column's skeleton pixels are grouped into runs separated by more than
    `gap_threshold` empty cells; every run yields a delegate on the skeleton
    pixel nearest its center,
    branches numbered from the top (largest y) down, weight = run length.

    Raises:
        NonConvergenceError: If thinning does not reach a fixed point
    """
    octet_pair = octet_pair or default_octet_pair()
    if gap_threshold is None:
        gap_threshold = octet_pair.thinning.radius
    if gap_threshold < 1:
        raise ValueError(f"gap_threshold must be >= 1, got {gap_threshold}")

    band = binarize(thicken_plane(plane, tau, thicken_passes, octet_pair.thickening), 1)
    skeleton = thin_to_convergence(band, octet_pair.thinning, max_passes)

    y_centers = plane.y_centers()
    columns: List[Tuple[Delegate, ...]] = []
    for ix in range(plane.nx):
        rows = np.nonzero(skeleton.cells[:, ix])[0]
        runs = list(reversed(_runs(rows, gap_threshold)))
        columns.append(tuple(
            Delegate(float(y_centers[_run_center(run)]), branch, float(run.size))
            for branch, run in enumerate(runs)
        ))
    confidence = _confidence(plane, columns)
    logger.debug("morphological path: %d delegates, confidence %.4f",
                 sum(map(len, columns)), confidence)
    return NarrowPath(tuple(columns), plane.x_range, plane.y_range, confidence)


def diffuse(plane: DataPlane, config: 'RunConfig', octet_pair: OctetPair) -> DataPlane:
    """Diffusion step selected by config.diffusion."""
    if config.diffusion == 'ids':
        radius = config.radius
        if config.radius_units is not None:
            radius = radius_to_cells(config.radius_units, plane)
        return ids_spread(plane, radius, config.height)
    return thicken_plane(plane, config.tau, config.thicken_passes, octet_pair.thickening)


def extract(diffused: DataPlane, config: 'RunConfig', octet_pair: OctetPair) -> NarrowPath:
    """Extraction step selected by config.extraction."""
    if config.extraction == 'cog':
        return cog_extract(diffused)
    # thickening, when selected, already happened in diffuse()
    tau = 1 if config.diffusion == 'thicken' else config.tau
    return morph_extract(diffused, tau=tau, thicken_passes=0, octet_pair=octet_pair,
                         gap_threshold=config.gap_threshold, max_passes=config.max_passes)


def fit(dataset: Dataset, config: 'RunConfig', octet_pair: Optional[OctetPair] = None) -> MisoModel:
    """
    One modeling pass: project, diffuse and extract for every input dimension.

    Raises:
        EmptyDatasetError: If the dataset has no samples
    """
    if len(dataset) == 0:
        raise EmptyDatasetError("cannot fit an empty dataset")
    octet_pair = octet_pair or default_octet_pair()
    return MisoModel([fit_dimension(dataset, dim, config, octet_pair).path
                      for dim in range(dataset.input_dim)])


class DimensionFit(NamedTuple):
    """Intermediate planes and the narrow path of one input dimension."""
    plane: DataPlane
    diffused: DataPlane
    path: NarrowPath


def fit_dimension(dataset: Dataset, dim: int, config: 'RunConfig',
                  octet_pair: OctetPair) -> DimensionFit:
    """Project, diffuse and extract a single input dimension."""
    plane = project(dataset, dim, config.nx, config.ny)
    diffused = diffuse(plane, config, octet_pair)
    path = extract(diffused, config, octet_pair)
    logger.info("dim %d: %d delegates in %d columns, confidence %.4f", dim,
                path.delegate_total(), len(path.nonempty_columns()), path.confidence)
    return DimensionFit(plane, diffused, path)


def _nearest_nonempty(path: NarrowPath, ix: int) -> Tuple[Delegate, ...]:
    candidates = path.nonempty_columns()
    if not candidates:
        raise NoDelegateError("narrow path has no delegates")
    best = min(candidates, key=lambda j: (abs(j - ix), j))
    return path.columns[best]


def evaluate_path(path: NarrowPath, x: float, previous: Optional[float] = None) -> float:
    """
    Path value at x (clamped to the trained range).

    Multi-branch columns take the delegate nearest `previous`, ties going to
    the lower branch; without a previous estimate branch 0 is used.
    """
    ix = int(np.floor((x - path.x_range[0]) / path.dx))
    ix = min(max(ix, 0), path.nx - 1)
    column = path.columns[ix] or _nearest_nonempty(path, ix)
    if previous is None:
        return column[0].y
    return min(column, key=lambda d: (abs(d.y - previous), d.branch)).y


def predict(model: MisoModel, x: Sequence[float]) -> float:
    """
    Confidence-weighted mean of the per-dimension path values at x.

    Raises:
        NoDelegateError: If no path has any delegate
    """
    x = np.asarray(x, dtype=float).reshape(-1)
    if x.size != model.input_dim:
        raise ValueError(f"expected {model.input_dim} inputs, got {x.size}")

    values, weights = [], []
    previous = None
    for dim, path in enumerate(model.paths):
        if path.delegate_total() == 0:
            logger.warning("dim %d has an empty narrow path and is skipped", dim)
            continue
        previous = evaluate_path(path, float(x[dim]), previous)
        values.append(previous)
        weights.append(path.confidence)
    if not values:
        raise NoDelegateError("model has no delegates in any dimension")

    values_arr, weights_arr = np.array(values), np.array(weights)
    if weights_arr.sum() == 0:
        return float(values_arr.mean())
    return float((values_arr * weights_arr).sum() / weights_arr.sum())
