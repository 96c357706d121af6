"""Integration tests for pipeline runs."""

import json

import numpy as np
import pytest

from alm_morph import Experiment
from alm_morph.config import RunConfig
from alm_morph.datasets import chained
from alm_morph.exceptions import ExperimentError
from alm_morph.experiment import burn_points
from alm_morph.formats import read_path_points, read_pgm, write_dataset
from alm_morph.models.plane import DataPlane, Dataset


def test_cog_run_collapses_circle(circle_dataset, cog_config):
    """Test IDS + COG gives exactly one delegate per nonempty column."""
    experiment = Experiment(cog_config)
    results = experiment.run(circle_dataset)
    assert results.status == 'completed'
    assert results.seed == 0
    path = results.paths[0]
    assert all(len(column) <= 1 for column in path.columns)
    assert results.summary['paths'][0]['multi_delegate_columns'] == 0


def test_morph_run_keeps_branches(circle_dataset, morph_config):
    """Test thickening + thinning keeps multi-delegate columns on the circle."""
    results = Experiment(morph_config).run(circle_dataset)
    summary = results.summary['paths'][0]
    assert summary['multi_delegate_columns'] > 0
    assert summary['delegates'] == results.paths[0].delegate_total()


def test_artifacts_are_written(tmp_path, morph_config):
    """Test every per-dimension artifact and the summary land in the output directory."""
    x = np.linspace(0.0, 1.0, 200)
    dataset = Dataset(np.column_stack([x, x[::-1]]), x)
    results = Experiment(morph_config).run(dataset)
    output_dir = tmp_path / "out"
    for dim in range(2):
        for name in (f"plane_d{dim}.pgm", f"diffused_d{dim}.pgm", f"path_d{dim}.csv", f"overlay_d{dim}.pgm"):
            assert (output_dir / name).exists()
    assert read_pgm(output_dir / "plane_d0.pgm").shape == (64, 64)
    points = read_path_points(output_dir / "path_d1.csv")
    assert len(points) == results.paths[1].delegate_total()

    summary = json.loads((output_dir / "summary.json").read_text())
    assert summary == results.summary
    assert summary['samples'] == 200
    assert summary['grid'] == [64, 64]
    assert set(results.artifacts) >= {'summary', 'plane_d0', 'overlay_d1'}


def test_run_reads_dataset_file(tmp_path, cog_config, circle_dataset):
    """Test a dataset path given at construction is read by run()."""
    csv = write_dataset(tmp_path / "circle.csv", circle_dataset)
    results = Experiment(cog_config, str(csv)).run()
    assert results.summary['samples'] == 400


def test_from_config_applies_overrides(tmp_path):
    """Test file values and keyword overrides combine."""
    config_path = tmp_path / "run.yaml"
    config_path.write_text("nx: 16\nny: 16\nextraction: thin\n")
    experiment = Experiment.from_config(str(config_path), output_dir=str(tmp_path / "o"), ny=24)
    assert experiment.config.nx == 16
    assert experiment.config.ny == 24
    assert experiment.config.extraction == 'thin'


def test_empty_dataset_fails(cog_config):
    """Test zero samples abort the run with ExperimentError."""
    with pytest.raises(ExperimentError, match="no samples"):
        Experiment(cog_config).run(Dataset(np.empty((0, 1)), np.empty(0)))


def test_missing_dataset_fails(cog_config):
    """Test a run without any dataset is rejected."""
    with pytest.raises(ExperimentError, match="no dataset"):
        Experiment(cog_config).run()


def test_burn_points_marks_above_maximum():
    """Test burned points use max + 1 and display orientation."""
    plane = DataPlane(np.array([[0, 2], [1, 0]]), (0.0, 2.0), (0.0, 2.0))
    cells = burn_points(plane, np.array([[0.5, 0.5]]))
    assert cells[1, 0] == 3
    assert cells[0, 0] == 1


def test_chained_circles_branch_only_on_morph_path(tmp_path):
    """Test the chained set keeps multi-delegate columns with thinning and none with COG."""
    dataset = chained(n=1800, seed=0)
    cog = Experiment(RunConfig(diffusion='ids', extraction='cog', output_dir=str(tmp_path / "cog"))).run(dataset)
    morph = Experiment(RunConfig(diffusion='thicken', extraction='thin',
                                 output_dir=str(tmp_path / "morph"))).run(dataset)
    assert cog.summary['paths'][0]['multi_delegate_columns'] == 0
    assert morph.summary['paths'][0]['multi_delegate_columns'] > 0
    assert max(morph.paths[0].delegate_counts()) >= 2


def test_seed_is_recorded(tmp_path, circle_dataset):
    """Test the configured seed lands in the results and summary.json."""
    config = RunConfig(seed=11, output_dir=str(tmp_path / "seeded"))
    results = Experiment(config).run(circle_dataset)
    assert results.seed == 11
    assert json.loads((tmp_path / "seeded" / "summary.json").read_text())['seed'] == 11
