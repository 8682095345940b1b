"""
Chemoattractant diffusion from a clamped destination.

One engine, ``run_clamped_diffusion``, produces both readings of the
diffusion map: the concentration field a chemotactic agent climbs, and the
first-arrival times of the threshold front.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from config import settings
from field.diffusion import apply_clamps, check_stability, diffuse_values
from field.models import ScalarField, TraceMode
from field.tracing import greedy_trace
from maze.models import Coord, MazeGrid, PathTrace
from maze.oracle import UNREACHED, bfs_distances
from utils.errors import FrontNeverArrivesError, PlateauError

logger = logging.getLogger(__name__)

NEVER = -1

Snapshot = Callable[[int, ScalarField], None]


class ChemoConfig(BaseModel):
    """Parameters of the diffusing substance."""

    model_config = ConfigDict(frozen=True)

    D: float = Field(default=settings.CHEMO_DIFFUSION, gt=0)
    dt: float = Field(default=settings.CHEMO_DT, gt=0)
    threshold: float = Field(default=settings.CHEMO_THRESHOLD, gt=0, lt=1)
    clamp_value: float = Field(default=settings.CHEMO_CLAMP_VALUE, gt=0)
    max_steps: int = Field(default=settings.CHEMO_MAX_STEPS, ge=0)

    @model_validator(mode="after")
    def _threshold_below_clamp(self) -> "ChemoConfig":
        if self.threshold >= self.clamp_value:
            raise ValueError(
                f"threshold {self.threshold} must be below clamp_value {self.clamp_value}"
            )
        return self


@dataclass(frozen=True, eq=False)
class ArrivalField:
    """
    First step at which each cell was reached; ``NEVER`` where it was not.

    ``steps`` is the number of steps the producing run took.
    """

    times: np.ndarray
    steps: int = 0

    def __post_init__(self) -> None:
        times = np.array(self.times, dtype=np.int64, copy=True)
        times.setflags(write=False)
        object.__setattr__(self, "times", times)

    def at(self, cell: Coord) -> int:
        return int(self.times[cell[1], cell[0]])

    def reached(self, cell: Coord) -> bool:
        return self.at(cell) != NEVER

    def as_field(self) -> ScalarField:
        return ScalarField(self.times, sentinel=NEVER)


@dataclass(frozen=True)
class DiffusionRun:
    """Final concentration, arrival times and step count of one clamped run."""

    concentration: ScalarField
    arrivals: ArrivalField
    steps: int


def run_clamped_diffusion(
    grid: MazeGrid,
    config: ChemoConfig = ChemoConfig(),
    snapshot: Optional[Snapshot] = None,
    snapshot_every: int = 0,
) -> DiffusionRun:
    """
    Diffuse from the destination, clamped at ``clamp_value``, until the
    source crosses the threshold or ``max_steps`` run out.

    Args:
        grid: Maze to fill
        config: Substance parameters
        snapshot: Called as ``snapshot(step, concentration)`` every
            ``snapshot_every`` steps (and at step 0)
        snapshot_every: Snapshot period; 0 disables snapshots

    Returns:
        DiffusionRun; the source is NEVER in ``arrivals`` if the front did
        not reach it

    Raises:
        UnstableStepError: D*dt > 0.25
    """
    check_stability(config.D * config.dt, "chemoattractant diffusion")
    mask = grid.corridor_mask()
    clamps = [(grid.destination, config.clamp_value)]
    values = np.zeros(grid.shape)
    apply_clamps(values, clamps)

    arrivals = np.full(grid.shape, NEVER, dtype=np.int64)
    arrivals[mask & (values >= config.threshold)] = 0
    sx, sy = grid.source

    if snapshot is not None and snapshot_every > 0:
        snapshot(0, ScalarField(values))

    coefficient = config.D * config.dt
    step = 0
    while step < config.max_steps and arrivals[sy, sx] == NEVER:
        step += 1
        values = diffuse_values(values, mask, coefficient)
        apply_clamps(values, clamps)
        arrivals[mask & (arrivals == NEVER) & (values >= config.threshold)] = step
        if snapshot is not None and snapshot_every > 0 and step % snapshot_every == 0:
            snapshot(step, ScalarField(values))

    logger.debug(
        f"Clamped diffusion stopped after {step} steps, "
        f"source {'reached' if arrivals[sy, sx] != NEVER else 'not reached'}"
    )
    return DiffusionRun(
        concentration=ScalarField(values),
        arrivals=ArrivalField(arrivals, steps=step),
        steps=step,
    )


def map_chemoattractant(grid: MazeGrid, config: ChemoConfig = ChemoConfig()) -> ScalarField:
    """Concentration field once the front reaches the source (or max_steps)."""
    return run_clamped_diffusion(grid, config).concentration


def arrival_time_map(
    grid: MazeGrid,
    config: ChemoConfig = ChemoConfig(),
    snapshot: Optional[Snapshot] = None,
    snapshot_every: int = 0,
) -> ArrivalField:
    """
    First-crossing step of the threshold front for every corridor cell.

    Raises:
        FrontNeverArrivesError: the source is still below threshold at
            max_steps, or is walled off from the destination
        UnstableStepError: D*dt > 0.25
    """
    if bfs_distances(grid, grid.destination)[grid.source[1], grid.source[0]] == UNREACHED:
        raise FrontNeverArrivesError(f"source {grid.source} is sealed off from the destination")

    run = run_clamped_diffusion(grid, config, snapshot, snapshot_every)
    if not run.arrivals.reached(grid.source):
        raise FrontNeverArrivesError(
            f"front did not reach source {grid.source} within {config.max_steps} steps"
        )
    return run.arrivals


def chemotactic_trace(conc: ScalarField, grid: MazeGrid) -> PathTrace:
    """
    A chemotactic agent at the source climbing the attractant.

    Raises:
        PlateauError: no attractant at the source yet, or a flat patch en route
    """
    conc.check_matches(grid)
    if conc.at(grid.source) <= 0.0:
        raise PlateauError(
            f"no attractant at source {grid.source}; run more diffusion steps"
        )
    return greedy_trace(conc, grid, grid.source, grid.destination, TraceMode.ASCEND)


def arrival_descent_trace(arrivals: ArrivalField, grid: MazeGrid) -> PathTrace:
    """
    Walk against the front: always to the earliest-reached neighbour.

    Raises:
        FrontNeverArrivesError: the source was never reached
        PlateauError: no neighbour was reached strictly earlier
    """
    if not arrivals.reached(grid.source):
        raise FrontNeverArrivesError(f"source {grid.source} has no arrival time")
    return greedy_trace(
        arrivals.as_field(), grid, grid.source, grid.destination, TraceMode.DESCEND
    )
