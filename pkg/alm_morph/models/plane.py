"""Dataset, IDS plane and narrow path models."""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np


@dataclass(frozen=True, eq=False)
class Dataset:
    """MISO samples: one row of inputs and one output per sample."""
    inputs: np.ndarray   # (n_samples, input_dim)
    outputs: np.ndarray  # (n_samples,)

    def __post_init__(self):
        """Validate shapes and finiteness."""
        inputs = np.array(self.inputs, dtype=float)
        outputs = np.array(self.outputs, dtype=float).reshape(-1)
        if inputs.ndim == 1:
            inputs = inputs.reshape(-1, 1)
        if inputs.ndim != 2 or inputs.shape[1] < 1:
            raise ValueError(f"inputs must be (n_samples, input_dim), got shape {inputs.shape}")
        if inputs.shape[0] != outputs.shape[0]:
            raise ValueError(f"{inputs.shape[0]} input rows but {outputs.shape[0]} outputs")
        if not (np.isfinite(inputs).all() and np.isfinite(outputs).all()):
            raise ValueError("dataset values must be finite")
        inputs.setflags(write=False)
        outputs.setflags(write=False)
        object.__setattr__(self, 'inputs', inputs)
        object.__setattr__(self, 'outputs', outputs)

    @property
    def input_dim(self) -> int:
        return int(self.inputs.shape[1])

    def __len__(self) -> int:
        return int(self.outputs.shape[0])


@dataclass(frozen=True, eq=False)
class DataPlane:
    """
    nx x ny grid of non-negative integer ink over an input-output rectangle.

    cells[iy, ix]: iy = 0 is the lowest output bin, ix = 0 the lowest input bin.
    """
    cells: np.ndarray
    x_range: Tuple[float, float]
    y_range: Tuple[float, float]

    def __post_init__(self):
        """Validate cells and ranges."""
        cells = np.array(self.cells, dtype=np.int64)
        if cells.ndim != 2 or cells.shape[0] < 1 or cells.shape[1] < 1:
            raise ValueError(f"DataPlane cells must be a non-empty 2-D grid, got shape {cells.shape}")
        if (cells < 0).any():
            raise ValueError("DataPlane cells must be non-negative")
        for name, (lo, hi) in (('x_range', self.x_range), ('y_range', self.y_range)):
            if not hi > lo:
                raise ValueError(f"{name} must be non-degenerate, got ({lo}, {hi})")
        cells.setflags(write=False)
        object.__setattr__(self, 'cells', cells)
        object.__setattr__(self, 'x_range', (float(self.x_range[0]), float(self.x_range[1])))
        object.__setattr__(self, 'y_range', (float(self.y_range[0]), float(self.y_range[1])))

    @property
    def nx(self) -> int:
        return int(self.cells.shape[1])

    @property
    def ny(self) -> int:
        return int(self.cells.shape[0])

    @property
    def dx(self) -> float:
        return (self.x_range[1] - self.x_range[0]) / self.nx

    @property
    def dy(self) -> float:
        return (self.y_range[1] - self.y_range[0]) / self.ny

    def y_centers(self) -> np.ndarray:
        return self.y_range[0] + (np.arange(self.ny) + 0.5) * self.dy

    def x_index(self, x: float) -> int:
        """Column containing x, clamped to the frame."""
        ix = int(np.floor((x - self.x_range[0]) / self.dx))
        return min(max(ix, 0), self.nx - 1)

    def y_index(self, y: float) -> int:
        """Row containing y, clamped to the frame."""
        iy = int(np.floor((y - self.y_range[0]) / self.dy))
        return min(max(iy, 0), self.ny - 1)

    def mass(self) -> int:
        return int(self.cells.sum())

    def with_cells(self, cells: np.ndarray) -> 'DataPlane':
        """Same frame, new cells."""
        return DataPlane(cells, self.x_range, self.y_range)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DataPlane):
            return NotImplemented
        return (self.x_range == other.x_range and self.y_range == other.y_range
                and self.cells.shape == other.cells.shape
                and bool(np.array_equal(self.cells, other.cells)))

    def __hash__(self) -> int:
        return hash((self.x_range, self.y_range, self.cells.tobytes()))


@dataclass(frozen=True)
class Delegate:
    """Representative point of one branch in a column."""
    y: float
    branch: int
    weight: float

    def __post_init__(self):
        if self.weight < 0:
            raise ValueError(f"delegate weight must be non-negative, got {self.weight}")
        if self.branch < 0:
            raise ValueError(f"branch label must be non-negative, got {self.branch}")


@dataclass(frozen=True)
class NarrowPath:
    """Delegates per column of a plane, with the plane's confidence."""
    columns: Tuple[Tuple[Delegate, ...], ...]
    x_range: Tuple[float, float]
    y_range: Tuple[float, float]
    confidence: float

    def __post_init__(self):
        """Validate branch labels, delegate ranges and confidence."""
        if self.confidence < 0:
            raise ValueError(f"confidence must be non-negative, got {self.confidence}")
        lo, hi = self.y_range
        for ix, column in enumerate(self.columns):
            if [d.branch for d in column] != list(range(len(column))):
                raise ValueError(f"column {ix} branch labels must run 0..{len(column) - 1}")
            for delegate in column:
                if not lo <= delegate.y <= hi:
                    raise ValueError(f"column {ix} delegate y={delegate.y} outside y_range {self.y_range}")
        object.__setattr__(self, 'columns', tuple(tuple(c) for c in self.columns))

    @property
    def nx(self) -> int:
        return len(self.columns)

    @property
    def dx(self) -> float:
        return (self.x_range[1] - self.x_range[0]) / self.nx

    def x_center(self, ix: int) -> float:
        return self.x_range[0] + (ix + 0.5) * self.dx

    def delegate_counts(self) -> List[int]:
        return [len(column) for column in self.columns]

    def delegate_total(self) -> int:
        return sum(self.delegate_counts())

    def nonempty_columns(self) -> List[int]:
        return [ix for ix, column in enumerate(self.columns) if column]

    def points(self) -> np.ndarray:
        """(x_center, y) of every delegate, shape (k, 2)."""
        points = [(self.x_center(ix), d.y) for ix, column in enumerate(self.columns) for d in column]
        return np.array(points, dtype=float).reshape(-1, 2)


@dataclass
class MisoModel:
    """One narrow path per input dimension, recombined by confidence."""
    paths: List[NarrowPath] = field(default_factory=list)

    @property
    def input_dim(self) -> int:
        return len(self.paths)

    @property
    def confidences(self) -> List[float]:
        return [p.confidence for p in self.paths]

    def path(self, dim: int) -> NarrowPath:
        return self.paths[dim]

    def describe(self) -> Optional[str]:
        if not self.paths:
            return None
        parts = [f"dim {d}: {p.delegate_total()} delegates, confidence {p.confidence:.4f}"
                 for d, p in enumerate(self.paths)]
        return "; ".join(parts)
