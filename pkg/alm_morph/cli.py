"""
Command-line front end.

    alm-morph gen circle -n 400 -o circle.csv
    alm-morph pipeline circle.csv --diffusion thicken --extraction thin
    alm-morph axioms ext-thin --trials 1000
    alm-morph render circle.csv -o circle.pgm --path output/path_d0.csv

Exit status: 0 on success or when every required law holds, 1 when a
required law is violated, 2 on usage, configuration or I/O errors.
"""

import argparse
import logging
import sys
from typing import List, Optional

from . import __version__
from .alm import project
from .config import DIFFUSION_MODES, EXTRACTION_MODES, OUTPUT_MODES
from .datasets import FUNCTIONS, SHAPES, generate
from .exceptions import AlmMorphError
from .experiment import Experiment, burn_points
from .formats.pgm import write_pgm, write_plane
from .formats.reports import format_report_text, write_reports
from .formats.tabular import read_dataset, read_path_points, write_dataset
from .verification import TARGETS, all_satisfied, run_target

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_ERROR = 2

LOG_LEVELS = {'quiet': logging.WARNING, 'monitor': logging.INFO, 'debug': logging.DEBUG}


def configure_logging(mode: str = 'quiet') -> None:
    """Map an output mode onto the root log level."""
    if mode not in LOG_LEVELS:
        raise ValueError(f"mode must be one of {list(LOG_LEVELS)}, got '{mode}'")
    logging.basicConfig(
        level=LOG_LEVELS[mode],
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def cmd_gen(args: argparse.Namespace) -> int:
    dataset = generate(args.shape, args.n, noise=args.noise, seed=args.seed,
                       function_name=args.function, extra_dims=args.extra_dims)
    path = write_dataset(args.output, dataset)
    logger.info("wrote %d samples to %s", len(dataset), path)
    print(f"{path}: {len(dataset)} samples, {dataset.input_dim} input(s)")
    return EXIT_OK


def cmd_pipeline(args: argparse.Namespace) -> int:
    experiment = Experiment.from_config(
        args.config, args.dataset,
        nx=args.nx, ny=args.ny, radius=args.radius, radius_units=args.radius_units,
        height=args.height, diffusion=args.diffusion, extraction=args.extraction,
        tau=args.tau, thicken_passes=args.thicken_passes, gap_threshold=args.gap_threshold,
        max_passes=args.max_passes, seed=args.seed, octet_file=args.octet_file,
        output_dir=args.output_dir, mode=args.mode,
    )
    if args.mode is None:
        configure_logging(experiment.config.mode)
    results = experiment.run()
    for dim, path_info in enumerate(results.summary['paths']):
        print(f"dim {dim}: {path_info['delegates']} delegates in {path_info['nonempty_columns']} "
              f"columns ({path_info['multi_delegate_columns']} multi-delegate), "
              f"confidence {path_info['confidence']:.4f}")
    print(f"artifacts written to {experiment.config.output_dir}")
    return EXIT_OK


def cmd_axioms(args: argparse.Namespace) -> int:
    reports = run_target(args.target, trials=args.trials, seed=args.seed)
    text_path, json_path = write_reports(args.target, reports, args.output_dir)
    logger.info("reports written to %s and %s", text_path, json_path)
    print(format_report_text(args.target, reports), end="")
    return EXIT_OK if all_satisfied(reports) else EXIT_VIOLATED


def cmd_render(args: argparse.Namespace) -> int:
    dataset = read_dataset(args.dataset)
    plane = project(dataset, args.dim, args.nx, args.ny)
    if args.path:
        write_pgm(args.output, burn_points(plane, read_path_points(args.path)))
    else:
        write_plane(args.output, plane)
    print(f"{args.output}: {plane.nx}x{plane.ny} plane of input {args.dim}")
    return EXIT_OK


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alm-morph",
        description="Active Learning Method modeling with morphological narrow paths.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--mode", choices=OUTPUT_MODES, default=None,
                        help="output mode: quiet, monitor (progress) or debug")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a synthetic dataset as CSV")
    gen.add_argument("shape", choices=SHAPES)
    gen.add_argument("-n", type=_positive_int, default=400, help="number of samples")
    gen.add_argument("--noise", type=float, default=0.0, help="Gaussian noise std")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--function", choices=sorted(FUNCTIONS), default=None,
                     help="function for shape 'function' (default sine)")
    gen.add_argument("--extra-dims", type=int, default=0, help="irrelevant extra inputs")
    gen.add_argument("-o", "--output", required=True, help="CSV path")
    gen.set_defaults(handler=cmd_gen)

    pipeline = sub.add_parser("pipeline", help="fit a dataset and write planes, paths and overlays")
    pipeline.add_argument("dataset", help="CSV with header x1..xd,y")
    pipeline.add_argument("--config", help="YAML, JSON or key=value run config")
    pipeline.add_argument("--nx", type=int)
    pipeline.add_argument("--ny", type=int)
    pipeline.add_argument("--radius", type=int, help="spread radius in cells")
    pipeline.add_argument("--radius-units", type=float, help="spread radius in input units")
    pipeline.add_argument("--height", type=int)
    pipeline.add_argument("--diffusion", choices=DIFFUSION_MODES)
    pipeline.add_argument("--extraction", choices=EXTRACTION_MODES)
    pipeline.add_argument("--tau", type=int, help="binarization threshold")
    pipeline.add_argument("--thicken-passes", type=int)
    pipeline.add_argument("--gap-threshold", type=int)
    pipeline.add_argument("--max-passes", type=int)
    pipeline.add_argument("--seed", type=int, help="label recorded in summary.json; fitting is deterministic")
    pipeline.add_argument("--octet-file", help="mask file with 1, 8 or 16 blocks")
    pipeline.add_argument("--output-dir")
    pipeline.set_defaults(handler=cmd_pipeline)

    axioms = sub.add_parser("axioms", help="check operator laws over random trials")
    axioms.add_argument("target", choices=sorted(TARGETS))
    axioms.add_argument("--trials", type=_positive_int, default=1000)
    axioms.add_argument("--seed", type=int, default=0)
    axioms.add_argument("--output-dir", default="output")
    axioms.set_defaults(handler=cmd_axioms)

    render = sub.add_parser("render", help="write a projected plane as PGM")
    render.add_argument("dataset")
    render.add_argument("-o", "--output", required=True, help="PGM path")
    render.add_argument("--nx", type=int, default=64)
    render.add_argument("--ny", type=int, default=64)
    render.add_argument("--dim", type=int, default=0, help="input dimension to project")
    render.add_argument("--path", help="path CSV to burn into the plane")
    render.set_defaults(handler=cmd_render)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.mode or 'quiet')
    try:
        return args.handler(args)
    except (AlmMorphError, OSError, ValueError) as e:
        logger.error("%s", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
