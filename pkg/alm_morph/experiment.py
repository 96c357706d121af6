"""Pipeline runs: fit a dataset and write the plane, path and overlay artifacts."""

import json
import logging
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np

from .alm import OctetPair, fit_dimension
from .config import RunConfig, load_config, merge_overrides
from .exceptions import EmptyDatasetError, ExperimentError
from .formats.pgm import write_pgm, write_plane
from .formats.tabular import read_dataset, write_path
from .models.plane import DataPlane, Dataset, MisoModel, NarrowPath

logger = logging.getLogger(__name__)


@dataclass
class ExperimentResults:
    """Results from a completed pipeline run."""
    seed: int
    status: str
    model: MisoModel
    planes: List[DataPlane]
    diffused: List[DataPlane]
    artifacts: Dict[str, Path]
    summary: Dict[str, Any]
    config: dict
    start_time: datetime
    end_time: datetime
    duration_seconds: float

    @property
    def paths(self) -> List[NarrowPath]:
        return self.model.paths


def burn_points(plane: DataPlane, points: np.ndarray) -> np.ndarray:
    """
    Plane cells with every (x, y) point set one above the plane maximum.

    Returns cells in display orientation (highest output row first).
    """
    cells = plane.cells.copy()
    marker = int(cells.max()) + 1
    for x, y in np.asarray(points, dtype=float).reshape(-1, 2):
        cells[plane.y_index(y), plane.x_index(x)] = marker
    return np.flipud(cells)


def path_summary(path: NarrowPath) -> Dict[str, Any]:
    counts = path.delegate_counts()
    return {
        'confidence': path.confidence,
        'delegates': path.delegate_total(),
        'nonempty_columns': len(path.nonempty_columns()),
        'multi_delegate_columns': sum(1 for c in counts if c > 1),
        'delegate_counts': counts,
    }


class Experiment:
    """Runs one modeling pass over a dataset and writes its artifacts."""

    def __init__(self, config: RunConfig, dataset_path: Optional[str] = None):
        """
        Args:
            config: Validated run configuration
            dataset_path: Optional CSV dataset read by run() when no dataset is passed
        """
        self.config = config
        self.dataset_path = dataset_path
        self.octet_pair: Optional[OctetPair] = None

    @classmethod
    def from_config(cls, config_path: Optional[str] = None, dataset_path: Optional[str] = None,
                    **overrides: Any) -> 'Experiment':
        """
        Create an Experiment from a config file and command-line overrides.

        Args:
            config_path: Path to a YAML, JSON or key=value file; defaults apply when None
            dataset_path: Optional CSV dataset
            **overrides: RunConfig fields taking precedence over the file

        Returns:
            Experiment instance
        """
        config = load_config(config_path) if config_path else RunConfig()
        return cls(merge_overrides(config, **overrides), dataset_path)

    def initialize(self) -> None:
        """Load the structuring elements."""
        try:
            self.octet_pair = self.config.octet_pair()
        except Exception as e:
            raise ExperimentError(f"Failed to initialize experiment: {e}") from e

    def run(self, dataset: Optional[Dataset] = None) -> ExperimentResults:
        """
        Fit every input dimension and write the artifacts under config.output_dir.

        Per dimension d: plane_d{d}.pgm (projection), diffused_d{d}.pgm,
        path_d{d}.csv and overlay_d{d}.pgm; plus summary.json for the run.

        Raises:
            ExperimentError: If loading, fitting or writing fails
        """
        start_time = datetime.now()
        try:
            if self.octet_pair is None:
                self.initialize()
            if dataset is None:
                if self.dataset_path is None:
                    raise ExperimentError("no dataset given")
                dataset = read_dataset(self.dataset_path)
            if len(dataset) == 0:
                raise EmptyDatasetError("dataset has no samples")

            output_dir = Path(self.config.output_dir)
            output_dir.mkdir(parents=True, exist_ok=True)

            planes, diffused, paths = [], [], []
            artifacts: Dict[str, Path] = {}
            for dim in range(dataset.input_dim):
                plane, spread, path = fit_dimension(dataset, dim, self.config, self.octet_pair)
                planes.append(plane)
                diffused.append(spread)
                paths.append(path)

                artifacts[f'plane_d{dim}'] = write_plane(output_dir / f"plane_d{dim}.pgm", plane)
                artifacts[f'diffused_d{dim}'] = write_plane(output_dir / f"diffused_d{dim}.pgm", spread)
                artifacts[f'path_d{dim}'] = write_path(output_dir / f"path_d{dim}.csv", path)
                artifacts[f'overlay_d{dim}'] = write_pgm(
                    output_dir / f"overlay_d{dim}.pgm", burn_points(spread, path.points())
                )

            model = MisoModel(paths)
            logger.info("model: %s", model.describe())
            summary = {
                'samples': len(dataset),
                'diffusion': self.config.diffusion,
                'extraction': self.config.extraction,
                'grid': [self.config.nx, self.config.ny],
                'seed': self.config.seed,
                'paths': [path_summary(p) for p in paths],
            }
            summary_path = output_dir / "summary.json"
            summary_path.write_text(json.dumps(summary, indent=2) + "\n")
            artifacts['summary'] = summary_path
            for name, path in artifacts.items():
                logger.debug("wrote %s: %s", name, path)
            logger.info("wrote %d artifacts to %s", len(artifacts), output_dir)

            end_time = datetime.now()
            return ExperimentResults(
                seed=self.config.seed,
                status='completed',
                model=model,
                planes=planes,
                diffused=diffused,
                artifacts=artifacts,
                summary=summary,
                config=self.config.raw_config,
                start_time=start_time,
                end_time=end_time,
                duration_seconds=(end_time - start_time).total_seconds(),
            )

        except ExperimentError:
            raise
        except Exception as e:
            raise ExperimentError(f"Experiment failed: {e}") from e
