"""
Synthetic datasets for the structure-preservation runs.

All generators are deterministic under their seed.
"""

from typing import Callable, Dict, Optional

import numpy as np

from .exceptions import ConfigurationError
from .models.plane import Dataset


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _noisy(rng: np.random.Generator, values: np.ndarray, noise: float) -> np.ndarray:
    if noise < 0:
        raise ValueError(f"noise must be non-negative, got {noise}")
    if noise == 0:
        return values
    return values + rng.normal(0.0, noise, size=values.shape)


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")


def _arc(rng: np.random.Generator, n: int, cx: float, cy: float, r: float,
         start: float = 0.0, stop: float = 2 * np.pi):
    """n evenly spaced points of an arc with a random phase within one step."""
    step = (stop - start) / n
    theta = start + step * (np.arange(n) + rng.random())
    return cx + r * np.cos(theta), cy + r * np.sin(theta)


def circle(n: int = 400, noise: float = 0.0, seed: int = 0, radius: float = 1.0) -> Dataset:
    """Points on x^2 + y^2 = radius^2; x is the input, y the output."""
    _check_n(n)
    rng = _rng(seed)
    x, y = _arc(rng, n, 0.0, 0.0, radius)
    return Dataset(_noisy(rng, x, noise), _noisy(rng, y, noise))


def chained(n: int = 500, noise: float = 0.0, seed: int = 0) -> Dataset:
    """
    Four unit circles centered 2 apart on y = 0 plus a separate upper half circle.

    Points are split across the five pieces in proportion to arc length.
    """
    _check_n(n)
    rng = _rng(seed)
    # the half circle has half the arc length of a full one
    counts = np.floor(np.array([2, 2, 2, 2, 1]) / 9 * n).astype(int)
    counts[0] += n - counts.sum()
    xs, ys = [], []
    for center, count in zip((0.0, 2.0, 4.0, 6.0), counts[:4]):
        if count:
            x, y = _arc(rng, int(count), center, 0.0, 1.0)
            xs.append(x)
            ys.append(y)
    if counts[4]:
        x, y = _arc(rng, int(counts[4]), 3.0, 2.0, 1.0, 0.0, np.pi)
        xs.append(x)
        ys.append(y)
    x, y = np.concatenate(xs), np.concatenate(ys)
    return Dataset(_noisy(rng, x, noise), _noisy(rng, y, noise))


def halfmoon_set(n: int = 400, noise: float = 0.0, seed: int = 0) -> Dataset:
    """Two interleaving half circles: upper centered at (0, 0), lower at (1, 0.5)."""
    _check_n(n)
    rng = _rng(seed)
    n_upper = n - n // 2
    x_up, y_up = _arc(rng, n_upper, 0.0, 0.0, 1.0, 0.0, np.pi)
    x_lo, y_lo = (np.empty(0), np.empty(0))
    if n // 2:
        x_lo, y_lo = _arc(rng, n // 2, 1.0, 0.5, 1.0, np.pi, 2 * np.pi)
    x, y = np.concatenate([x_up, x_lo]), np.concatenate([y_up, y_lo])
    return Dataset(_noisy(rng, x, noise), _noisy(rng, y, noise))


def sugeno(x1: np.ndarray, x2: np.ndarray) -> np.ndarray:
    """Two-input nonlinear benchmark on [1, 5]^2."""
    return (1.0 + x1 ** -2.0 + x2 ** -1.5) ** 2


FUNCTIONS: Dict[str, Callable[[np.ndarray], np.ndarray]] = {
    'sine': lambda x: np.sin(x[:, 0]),
    'linear': lambda x: x[:, 0],
    'quadratic': lambda x: x[:, 0] ** 2,
    'sugeno': lambda x: sugeno(x[:, 0], x[:, 1]),
}

DOMAINS = {
    'sine': (0.0, 2 * np.pi),
    'linear': (0.0, 1.0),
    'quadratic': (-1.0, 1.0),
    'sugeno': (1.0, 5.0),
}


def function(name: str = 'sine', n: int = 100, noise: float = 0.0, seed: int = 0,
             extra_dims: int = 0) -> Dataset:
    """
    Samples of a named single-valued function.

    Inputs are uniform over the function's domain; `extra_dims` appends
    irrelevant uniform inputs.

    Raises:
        ConfigurationError: If the function name is unknown
    """
    if name not in FUNCTIONS:
        raise ConfigurationError(f"unknown function '{name}', expected one of {sorted(FUNCTIONS)}")
    _check_n(n)
    if extra_dims < 0:
        raise ValueError(f"extra_dims must be non-negative, got {extra_dims}")
    rng = _rng(seed)
    lo, hi = DOMAINS[name]
    used = 2 if name == 'sugeno' else 1
    inputs = rng.uniform(lo, hi, size=(n, used + extra_dims))
    return Dataset(inputs, _noisy(rng, FUNCTIONS[name](inputs), noise))


SHAPES = ('circle', 'chained', 'halfmoon-set', 'function')


def generate(shape: str, n: int, noise: float = 0.0, seed: int = 0,
             function_name: Optional[str] = None, extra_dims: int = 0) -> Dataset:
    """
    Dispatch on a shape name as given on the command line.

    Raises:
        ConfigurationError: If the shape is unknown
    """
    if shape == 'circle':
        return circle(n, noise, seed)
    if shape == 'chained':
        return chained(n, noise, seed)
    if shape == 'halfmoon-set':
        return halfmoon_set(n, noise, seed)
    if shape == 'function':
        return function(function_name or 'sine', n, noise, seed, extra_dims)
    raise ConfigurationError(f"unknown shape '{shape}', expected one of {list(SHAPES)}")
