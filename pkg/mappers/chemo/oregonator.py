"""
Two-variable Oregonator excitable medium on an upscaled maze lattice.

Each maze cell becomes a k x k block of simulation cells, so the lattice
spacing is 1/k of a maze cell and the activator diffusion term reads
``du * k^2 * Laplacian``. A wave launched at the destination runs through the
corridors; the first step at which a block's mean activator reaches
``arrival_level`` is that maze cell's arrival time.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from config import settings
from field.diffusion import check_stability, masked_laplacian
from field.models import ScalarField
from maze.models import Coord, MazeGrid, PathTrace
from utils.errors import (
    BadInputError,
    FrontNeverArrivesError,
    NumericalBlowupError,
    WaveDiedError,
)

from .diffusion import NEVER, ArrivalField, Snapshot, arrival_descent_trace

logger = logging.getLogger(__name__)

FLUSH_BELOW = 1e-30
FINITE_CHECK_EVERY = 100


class OregonatorParams(BaseModel):
    """Excitable-regime constants and run controls."""

    model_config = ConfigDict(frozen=True)

    epsilon: float = Field(default=settings.OREGONATOR_EPSILON, gt=0)
    f: float = Field(default=settings.OREGONATOR_F, gt=0)
    q: float = Field(default=settings.OREGONATOR_Q, gt=0)
    du: float = Field(default=settings.OREGONATOR_DU, gt=0)
    dt: float = Field(default=settings.OREGONATOR_DT, gt=0)
    upscale: int = Field(default=settings.OREGONATOR_UPSCALE, ge=4)
    max_steps: int = Field(default=settings.OREGONATOR_MAX_STEPS, gt=0)
    arrival_level: float = Field(default=settings.OREGONATOR_ARRIVAL_LEVEL, gt=0, le=1)
    death_level: float = Field(default=settings.OREGONATOR_DEATH_LEVEL, gt=0, lt=1)
    stimulus: Optional[Coord] = None


@dataclass(frozen=True, eq=False)
class OregonatorState:
    """Activator ``u`` and inhibitor ``v`` on the fine lattice after ``step`` steps."""

    u: np.ndarray
    v: np.ndarray
    params: OregonatorParams
    step: int = 0

    def __post_init__(self) -> None:
        for name in ("u", "v"):
            array = np.array(getattr(self, name), dtype=np.float64, copy=True)
            array.setflags(write=False)
            object.__setattr__(self, name, array)

    def block_mean(self) -> np.ndarray:
        """Mean activator per maze cell."""
        return _block_mean(self.u, self.params.upscale)


def _upscale_mask(mask: np.ndarray, k: int) -> np.ndarray:
    return np.repeat(np.repeat(mask, k, axis=0), k, axis=1)


def _block_mean(fine: np.ndarray, k: int) -> np.ndarray:
    height, width = fine.shape[0] // k, fine.shape[1] // k
    return fine.reshape(height, k, width, k).mean(axis=(1, 3))


def _stimulate(grid: MazeGrid, params: OregonatorParams, u: np.ndarray) -> Coord:
    cell = params.stimulus if params.stimulus is not None else grid.destination
    if not grid.in_bounds(cell):
        raise BadInputError(f"stimulus {cell} is outside the {grid.width}x{grid.height} grid")
    # A stimulus on a wall excites nothing
    if grid.is_corridor(cell):
        k = params.upscale
        x, y = cell
        u[y * k:(y + 1) * k, x * k:(x + 1) * k] = 1.0
    return cell


def step_oregonator(
    u: np.ndarray, v: np.ndarray, mask: np.ndarray, params: OregonatorParams
) -> Tuple[np.ndarray, np.ndarray]:
    """
    One explicit Euler step of the activator/inhibitor pair.

    The activator is clipped at zero and values below FLUSH_BELOW are set to
    zero; non-excitable cells are reset to exactly zero.
    """
    k = params.upscale
    reaction = (u - u * u - params.f * v * (u - params.q) / (u + params.q)) / params.epsilon
    u_next = u + params.dt * reaction + params.du * k * k * params.dt * masked_laplacian(u, mask)
    v_next = v + params.dt * (u - v)

    np.maximum(u_next, 0.0, out=u_next)
    u_next[u_next < FLUSH_BELOW] = 0.0
    u_next[~mask] = 0.0
    v_next[~mask] = 0.0
    return u_next, v_next


def oregonator_wave(
    grid: MazeGrid,
    params: OregonatorParams = OregonatorParams(),
    snapshot: Optional[Snapshot] = None,
    snapshot_every: int = 0,
) -> Tuple[ArrivalField, OregonatorState]:
    """
    Run the excitation wave until it reaches the source.

    Args:
        grid: Maze; corridors become excitable, walls do not
        params: Medium constants and run controls
        snapshot: Called as ``snapshot(step, block_mean_u)``
        snapshot_every: Snapshot period; 0 disables snapshots

    Returns:
        (arrival times per maze cell, final state)

    Raises:
        UnstableStepError: du * dt * k^2 > 0.25
        WaveDiedError: activator fell below death_level everywhere
        NumericalBlowupError: non-finite u or v
        FrontNeverArrivesError: max_steps exhausted before the source, or the
            wave crossed the source without reaching arrival_level
        BadInputError: stimulus outside the grid
    """
    k = params.upscale
    check_stability(params.du * params.dt * k * k, "oregonator activator diffusion")

    maze_mask = grid.corridor_mask()
    mask = _upscale_mask(maze_mask, k)
    u = np.zeros(mask.shape)
    v = np.zeros(mask.shape)
    stimulus = _stimulate(grid, params, u)

    arrivals = np.full(grid.shape, NEVER, dtype=np.int64)
    arrivals[maze_mask & (_block_mean(u, k) >= params.arrival_level)] = 0
    sx, sy = grid.source
    source_peak = 0.0

    logger.info(
        f"Oregonator wave on {grid.width}x{grid.height} maze, k={k}, stimulus at {stimulus}"
    )
    if snapshot is not None and snapshot_every > 0:
        snapshot(0, ScalarField(_block_mean(u, k)))

    step = 0
    while arrivals[sy, sx] == NEVER:
        if step >= params.max_steps:
            raise FrontNeverArrivesError(
                f"wave did not reach source {grid.source} within {params.max_steps} steps"
            )
        if float(u.max()) < params.death_level:
            if source_peak >= params.death_level:
                raise FrontNeverArrivesError(
                    f"wave crossed source {grid.source} peaking at {source_peak:.3g}, "
                    f"below arrival_level {params.arrival_level}"
                )
            raise WaveDiedError(f"activator below {params.death_level} everywhere at step {step}")

        step += 1
        u, v = step_oregonator(u, v, mask, params)

        if step % FINITE_CHECK_EVERY == 0 and not (np.isfinite(u).all() and np.isfinite(v).all()):
            raise NumericalBlowupError(f"non-finite activator or inhibitor at step {step}")

        blocks = _block_mean(u, k)
        source_peak = max(source_peak, float(blocks[sy, sx]))
        arrivals[maze_mask & (arrivals == NEVER) & (blocks >= params.arrival_level)] = step
        if snapshot is not None and snapshot_every > 0 and step % snapshot_every == 0:
            snapshot(step, ScalarField(blocks))

    if not (np.isfinite(u).all() and np.isfinite(v).all()):
        raise NumericalBlowupError(f"non-finite activator or inhibitor at step {step}")

    logger.info(f"Oregonator wave reached the source after {step} steps")
    return ArrivalField(arrivals, steps=step), OregonatorState(u=u, v=v, params=params, step=step)


def run_oregonator(
    grid: MazeGrid,
    params: OregonatorParams = OregonatorParams(),
    snapshot: Optional[Snapshot] = None,
    snapshot_every: int = 0,
) -> Tuple[ArrivalField, PathTrace]:
    """Excitation wave from the destination, then descent of its arrival times."""
    arrivals, _ = oregonator_wave(grid, params, snapshot, snapshot_every)
    return arrivals, arrival_descent_trace(arrivals, grid)
