"""Shared fixtures."""

import numpy as np
import pytest

from alm_morph.config import RunConfig
from alm_morph.datasets import circle
from alm_morph.models.image import default_thickening_octet, default_thinning_octet


@pytest.fixture
def rng():
    return np.random.Generator(np.random.PCG64(1234))


@pytest.fixture
def thinning_octet():
    return default_thinning_octet()


@pytest.fixture
def thickening_octet():
    return default_thickening_octet()


@pytest.fixture
def circle_dataset():
    """400 noise-free points on the unit circle."""
    return circle(n=400, noise=0.0, seed=7)


@pytest.fixture
def morph_config(tmp_path):
    """Thicken-then-thin pipeline writing under a temporary directory."""
    return RunConfig(diffusion='thicken', extraction='thin', output_dir=str(tmp_path / "out"))


@pytest.fixture
def cog_config(tmp_path):
    """IDS-then-COG pipeline writing under a temporary directory."""
    return RunConfig(diffusion='ids', extraction='cog', output_dir=str(tmp_path / "out"))
