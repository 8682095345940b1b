"""
Command-line interface: generate, solve, compare and voronoi.

Exit codes: 0 success, 1 no path, 2 bad input, 3 solver failure.
"""

import argparse
import asyncio
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

from pydantic import BaseModel, ValidationError

from config import settings
from config.settings import configure_logging
from mappers.chemo import voronoi_from_seeds
from maze.ascii import open_arena, parse_ascii, serialize_ascii, with_markers
from maze.generator import generate
from maze.models import GenConfig, MazeGrid
from render.netpbm import render_labels_ppm
from utils.errors import BadInputError, MazeMapperError
from utils.formatters import format_error_message, format_report_json, format_reports_json
from utils.validators import parse_coordinate, parse_seeds, validate_positive, validate_seeds

from .main import MazeOrchestrator, load_pipeline_config
from .pipelines import MAPPER_NAMES, PipelineConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ALL_FAILED = 3


def _revalidated(model: BaseModel, **updates: Any) -> BaseModel:
    """Copy of a pydantic model with non-None updates applied and validated."""
    changes = {key: value for key, value in updates.items() if value is not None}
    if not changes:
        return model
    return type(model).model_validate({**model.model_dump(), **changes})


def _layered_config(args: argparse.Namespace) -> PipelineConfig:
    """Model defaults, then the --config file, then individual flags."""
    config = load_pipeline_config(args.config)
    return PipelineConfig(
        solver=_revalidated(
            config.solver, tolerance=args.tolerance, omega=args.omega, max_iters=args.max_iters
        ),
        chemo=_revalidated(config.chemo, max_steps=args.max_steps),
        oregonator=_revalidated(config.oregonator, max_steps=args.max_steps, upscale=args.upscale),
        dye=_revalidated(config.dye, steps=args.dye_steps),
    )


def _read_maze(args: argparse.Namespace) -> MazeGrid:
    grid = parse_ascii(Path(args.maze).read_text())
    source = parse_coordinate(args.source) if getattr(args, "source", None) else None
    destination = parse_coordinate(args.destination) if getattr(args, "destination", None) else None
    if source is not None or destination is not None:
        grid = with_markers(grid, source, destination)
    return grid


def _orchestrator(args: argparse.Namespace) -> MazeOrchestrator:
    validate_positive("--scale", args.scale)
    return MazeOrchestrator(
        config=_layered_config(args),
        render_dir=args.render,
        scale=args.scale,
        snapshot_every=getattr(args, "snapshot_every", 0) or 0,
    )


def _emit(text: str, report_path: Optional[Path]) -> None:
    sys.stdout.write(text)
    if report_path is not None:
        Path(report_path).write_text(text)


def cmd_generate(args: argparse.Namespace) -> int:
    """Write a generated maze as ASCII to --out, or stdout."""
    grid = generate(
        GenConfig(width=args.width, height=args.height, seed=args.seed, braid_fraction=args.braid)
    )
    text = serialize_ascii(grid)
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    """Run one mapper and print its RunReport."""
    grid = _read_maze(args)
    report = _orchestrator(args).run(grid, args.mapper)
    _emit(format_report_json(report.to_dict()), args.report)
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    """Run several mappers on one maze; exit 3 only if every mapper failed."""
    grid = _read_maze(args)
    mappers = [name.strip() for name in args.mappers.split(",") if name.strip()] if args.mappers else None
    reports = asyncio.run(_orchestrator(args).compare(grid, mappers))
    _emit(format_reports_json(report.to_dict() for report in reports), args.report)
    if all(report.error is not None for report in reports):
        return EXIT_ALL_FAILED
    return EXIT_OK


def cmd_voronoi(args: argparse.Namespace) -> int:
    """Diffusion Voronoi diagram of seeds in an open arena."""
    validate_positive("--scale", args.scale)
    seeds = parse_seeds(args.seeds)
    problem = validate_seeds(seeds, args.width, args.height)
    if problem is not None:
        raise BadInputError(problem)

    arena = open_arena(args.width, args.height)
    labels, boundary = voronoi_from_seeds(arena, seeds)
    if args.render is not None:
        args.render.mkdir(parents=True, exist_ok=True)
        (args.render / "voronoi.ppm").write_bytes(
            render_labels_ppm(labels, arena, boundary, args.scale)
        )

    summary: Dict[str, Any] = {
        "seeds": len(set(seeds)),
        "boundary_cells": len(boundary),
        "labelled_cells": int((labels.values >= 0).sum()),
    }
    sys.stdout.write(json.dumps(summary, sort_keys=True) + "\n")
    return EXIT_OK


def _add_run_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--maze", type=Path, required=True, help="ASCII maze file")
    parser.add_argument("--config", type=Path, help="JSON file with solver/chemo/oregonator/dye sections")
    parser.add_argument("--render", type=Path, help="directory for field and path images")
    parser.add_argument("--report", type=Path, help="also write the JSON report here")
    parser.add_argument("--scale", type=int, default=settings.DEFAULT_SCALE, help="pixels per cell")
    parser.add_argument("--source", help="override the source as X,Y")
    parser.add_argument("--destination", help="override the destination as X,Y")
    parser.add_argument("--tolerance", type=float, help="SOR residual tolerance")
    parser.add_argument("--omega", type=float, help="SOR relaxation factor in (0, 2)")
    parser.add_argument("--max-iters", type=int, help="SOR sweep limit")
    parser.add_argument("--max-steps", type=int, help="chemo/oregonator step limit")
    parser.add_argument("--upscale", type=int, help="oregonator lattice cells per maze cell")
    parser.add_argument("--dye-steps", type=int, help="fluid: advect dye this many steps and render it")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maze-mappers",
        description="Solve mazes with physical field mappers and check them against BFS.",
    )
    parser.add_argument("--log-level", help="override LOG_LEVEL (DEBUG, INFO, WARNING, ...)")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("generate", help="generate a maze")
    gen.add_argument("--width", type=int, required=True)
    gen.add_argument("--height", type=int, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--braid", type=float, default=0.0, help="fraction of dead ends to open")
    gen.add_argument("--out", type=Path, help="output file; stdout when omitted")
    gen.set_defaults(handler=cmd_generate)

    solve = commands.add_parser("solve", help="run one mapper")
    _add_run_options(solve)
    solve.add_argument("--mapper", required=True, choices=MAPPER_NAMES)
    solve.add_argument("--snapshot-every", type=int, default=0, help="frame period for --render")
    solve.set_defaults(handler=cmd_solve)

    compare = commands.add_parser("compare", help="run several mappers on one maze")
    _add_run_options(compare)
    compare.add_argument("--mappers", help=f"comma-separated subset of {','.join(MAPPER_NAMES)}")
    compare.set_defaults(handler=cmd_compare)

    voronoi = commands.add_parser("voronoi", help="diffusion Voronoi diagram in an open arena")
    voronoi.add_argument("--width", type=int, required=True)
    voronoi.add_argument("--height", type=int, required=True)
    voronoi.add_argument("--seeds", required=True, help='seed list "x1,y1;x2,y2;..."')
    voronoi.add_argument("--render", type=Path, help="directory for voronoi.ppm")
    voronoi.add_argument("--scale", type=int, default=settings.DEFAULT_SCALE)
    voronoi.set_defaults(handler=cmd_voronoi)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point for the ``maze-mappers`` command."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        return int(e.code or 0)

    configure_logging(args.log_level)
    try:
        return args.handler(args)
    except MazeMapperError as e:
        logger.debug(f"{args.command} failed", exc_info=True)
        sys.stderr.write(format_error_message(e.code, e.message) + "\n")
        return e.exit_code
    except ValidationError as e:
        sys.stderr.write(format_error_message("BAD_INPUT", str(e)) + "\n")
        return BadInputError.exit_code
    except OSError as e:
        sys.stderr.write(format_error_message("BAD_INPUT", str(e)) + "\n")
        return BadInputError.exit_code


if __name__ == "__main__":
    sys.exit(main())
