"""Dataset and narrow path CSV files."""

import warnings
from pathlib import Path
from typing import Union

import numpy as np

from ..exceptions import FormatError
from ..models.plane import Dataset, NarrowPath

PathLike = Union[str, Path]

PATH_HEADER = "x_index,x_center,branch,y,weight"


def write_dataset(path: PathLike, dataset: Dataset) -> Path:
    """CSV with header x1..xd,y and one row per sample."""
    header = ",".join([f"x{i + 1}" for i in range(dataset.input_dim)] + ["y"])
    rows = np.column_stack([dataset.inputs, dataset.outputs])
    path = Path(path)
    np.savetxt(path, rows, fmt="%.10g", delimiter=",", header=header, comments="")
    return path


def _read_csv(path: Path, expected_header=None):
    try:
        with open(path) as f:
            header = f.readline().strip()
            with warnings.catch_warnings():
                # header-only files are valid and load as empty
                warnings.simplefilter("ignore", UserWarning)
                data = np.loadtxt(f, delimiter=",", ndmin=2)
    except OSError as e:
        raise FormatError(f"{path}: cannot read: {e}") from e
    except ValueError as e:
        raise FormatError(f"{path}: malformed CSV row: {e}") from e
    columns = [c.strip() for c in header.split(",")] if header else []
    if expected_header is not None and columns != expected_header:
        raise FormatError(f"{path}: expected header {','.join(expected_header)}, got '{header}'")
    if data.size and data.shape[1] != len(columns):
        raise FormatError(f"{path}: {data.shape[1]} columns but header names {len(columns)}")
    return columns, data


def read_dataset(path: PathLike) -> Dataset:
    """
    Raises:
        FormatError: If the header is not x1..xd,y or rows are malformed
    """
    path = Path(path)
    columns, data = _read_csv(path)
    dim = len(columns) - 1
    if dim < 1 or columns != [f"x{i + 1}" for i in range(dim)] + ["y"]:
        raise FormatError(f"{path}: header must be x1..xd,y, got '{','.join(columns)}'")
    if not data.size:
        return Dataset(np.empty((0, dim)), np.empty(0))
    try:
        return Dataset(data[:, :dim], data[:, dim])
    except ValueError as e:
        raise FormatError(f"{path}: {e}") from e


def write_path(path: PathLike, narrow_path: NarrowPath) -> Path:
    """One row per delegate, columns x_index,x_center,branch,y,weight."""
    lines = [PATH_HEADER]
    for ix, column in enumerate(narrow_path.columns):
        for d in column:
            lines.append(f"{ix},{narrow_path.x_center(ix):.10g},{d.branch},{d.y:.10g},{d.weight:.10g}")
    path = Path(path)
    path.write_text("\n".join(lines) + "\n")
    return path


def read_path_points(path: PathLike) -> np.ndarray:
    """(x_center, y) of every delegate in a path CSV, shape (k, 2)."""
    path = Path(path)
    _, data = _read_csv(path, PATH_HEADER.split(","))
    if not data.size:
        return np.empty((0, 2))
    return data[:, [1, 3]]
