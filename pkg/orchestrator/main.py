"""
Main orchestrator: runs mapper pipelines against the BFS oracle.
"""

import asyncio
import json
import logging
import time
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict, ValidationError

from config import settings
from field.models import ScalarField
from maze.models import MazeGrid, PathTrace
from maze.oracle import oracle_path
from render.netpbm import render_overlay_ppm, render_scalar_pgm
from utils.errors import BadInputError, MazeMapperError, NoRouteError
from utils.formatters import format_path_summary

from .pipelines import MAPPER_NAMES, PIPELINES, PipelineConfig, PipelineOutcome, Snapshot

logger = logging.getLogger(__name__)


class RunReport(BaseModel):
    """One mapper's result on one maze, measured against the oracle."""

    model_config = ConfigDict(frozen=True)

    mapper: str
    converged: bool
    iterations: int
    path_length: Optional[int]
    oracle_length: Optional[int]
    length_ratio: Optional[float]
    wall_clock_ms: float
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        """JSON report; ``error`` appears only on a failed run."""
        return self.model_dump(exclude={"error"} if self.error is None else None)


def load_pipeline_config(path: Optional[Path]) -> PipelineConfig:
    """
    Read a JSON config file with optional solver/chemo/oregonator/dye sections.

    Raises:
        BadInputError: unreadable file, bad JSON, unknown keys or invalid values
    """
    if path is None:
        return PipelineConfig()
    try:
        data = json.loads(Path(path).read_text())
        return PipelineConfig.model_validate(data)
    except (OSError, json.JSONDecodeError, ValidationError) as e:
        raise BadInputError(f"cannot load config {path}: {e}") from e


class MazeOrchestrator:
    """Runs one or all mapper pipelines on a maze and reports against the oracle."""

    def __init__(
        self,
        config: PipelineConfig = PipelineConfig(),
        render_dir: Optional[Path] = None,
        scale: int = settings.DEFAULT_SCALE,
        snapshot_every: int = 0,
    ):
        """
        Args:
            config: Layered pipeline settings
            render_dir: Directory for field and path images; None disables rendering
            scale: Pixels per maze cell in rendered images
            snapshot_every: Frame period for chemo/chemotaxis/oregonator; 0 disables
        """
        self.config = config
        self.render_dir = Path(render_dir) if render_dir is not None else None
        self.scale = scale
        self.snapshot_every = snapshot_every

    def oracle(self, grid: MazeGrid) -> PathTrace:
        """
        Raises:
            NoPathError: source and destination are not connected
        """
        return oracle_path(grid)

    def _snapshot_writer(self, mapper: str, grid: MazeGrid) -> Optional[Snapshot]:
        if self.render_dir is None or self.snapshot_every <= 0:
            return None
        directory = self.render_dir

        def write(step: int, frame: ScalarField) -> None:
            (directory / f"{mapper}_{step:07d}.pgm").write_bytes(
                render_scalar_pgm(frame, grid, self.scale)
            )

        return write

    def _render(self, mapper: str, grid: MazeGrid, outcome: PipelineOutcome) -> None:
        if self.render_dir is None:
            return
        for name, image in sorted(outcome.fields.items()):
            (self.render_dir / f"{mapper}_{name}.pgm").write_bytes(
                render_scalar_pgm(image, grid, self.scale)
            )
        (self.render_dir / f"{mapper}_path.ppm").write_bytes(
            render_overlay_ppm(grid, outcome.path, None, self.scale)
        )

    def run(self, grid: MazeGrid, mapper: str, oracle: Optional[PathTrace] = None) -> RunReport:
        """
        Run one pipeline and compare its path with the oracle.

        Args:
            grid: Maze to solve
            mapper: Pipeline name, one of MAPPER_NAMES
            oracle: Precomputed oracle path; computed when omitted

        Returns:
            RunReport for the mapper

        Raises:
            BadInputError: unknown mapper
            MazeMapperError: any pipeline failure
        """
        if mapper not in PIPELINES:
            raise BadInputError(f"unknown mapper {mapper!r}; choose from {', '.join(MAPPER_NAMES)}")
        if oracle is None:
            oracle = self.oracle(grid)

        if self.render_dir is not None:
            self.render_dir.mkdir(parents=True, exist_ok=True)

        logger.info(f"Running {mapper} on a {grid.width}x{grid.height} maze")
        started = time.perf_counter()
        outcome = PIPELINES[mapper](
            grid, self.config, self._snapshot_writer(mapper, grid), self.snapshot_every
        )
        elapsed_ms = (time.perf_counter() - started) * 1000.0

        outcome.path.check_on(grid)
        if outcome.path.start != grid.source or outcome.path.end != grid.destination:
            raise NoRouteError(f"{mapper} path does not join source and destination")
        logger.debug(f"{mapper} path: {format_path_summary(outcome.path.cells)}")
        self._render(mapper, grid, outcome)

        report = RunReport(
            mapper=mapper,
            converged=outcome.converged,
            iterations=outcome.iterations,
            path_length=len(outcome.path),
            oracle_length=len(oracle),
            length_ratio=len(outcome.path) / len(oracle),
            wall_clock_ms=round(elapsed_ms, 3),
        )
        logger.info(
            f"{mapper}: {report.path_length} cells vs oracle {report.oracle_length} "
            f"in {report.wall_clock_ms:.1f} ms"
        )
        return report

    def run_safely(self, grid: MazeGrid, mapper: str, oracle: PathTrace) -> RunReport:
        """Like ``run`` but a pipeline failure becomes a report with ``error`` set."""
        started = time.perf_counter()
        try:
            return self.run(grid, mapper, oracle)
        except MazeMapperError as e:
            logger.error(f"{mapper} failed: {e.code}: {e.message}")
            return RunReport(
                mapper=mapper,
                converged=False,
                iterations=0,
                path_length=None,
                oracle_length=len(oracle),
                length_ratio=None,
                wall_clock_ms=round((time.perf_counter() - started) * 1000.0, 3),
                error=e.code,
            )

    async def compare(self, grid: MazeGrid, mappers: Optional[Sequence[str]] = None) -> List[RunReport]:
        """
        Run several pipelines concurrently on the same maze.

        The oracle runs first and gates the batch. Reports come back sorted by
        mapper name.

        Raises:
            NoPathError: the oracle finds no path
            BadInputError: an unknown mapper name
        """
        names = sorted(set(mappers)) if mappers else list(MAPPER_NAMES)
        unknown = [name for name in names if name not in PIPELINES]
        if unknown:
            raise BadInputError(f"unknown mapper(s) {', '.join(unknown)}")

        oracle = self.oracle(grid)
        reports = await asyncio.gather(
            *(asyncio.to_thread(self.run_safely, grid, name, oracle) for name in names)
        )
        return sorted(reports, key=lambda report: report.mapper)
