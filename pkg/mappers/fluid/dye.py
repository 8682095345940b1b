"""
Dye transport through the pressure-driven flow.

Each step moves dye across every corridor face in the downstream direction
(first-order upwind, conservative), then diffuses it. The face flux between
neighbours i and j is ``p_i - p_j``, the discrete form of ``v = -grad p``.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from config import settings
from field.diffusion import check_stability, diffuse_values
from field.models import ScalarField
from maze.models import Coord, MazeGrid
from utils.errors import CFLViolationError, FrontNeverArrivesError, UnstableStepError

from .pressure import FluidMap

logger = logging.getLogger(__name__)

INLET_CONCENTRATION = 1.0


@dataclass(frozen=True)
class DyeState:
    """Dye mass per cell after ``time`` steps."""

    concentration: ScalarField
    time: int = 0

    @classmethod
    def empty(cls, grid: MazeGrid) -> "DyeState":
        return cls(ScalarField.zeros(grid))

    def mass(self) -> float:
        return float(self.concentration.values.sum())


def _face_fluxes(pressure: np.ndarray, mask: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Eastward and southward face fluxes; zero on any face touching a wall."""
    east_faces = mask[:, 1:] & mask[:, :-1]
    south_faces = mask[1:, :] & mask[:-1, :]
    east = np.where(east_faces, pressure[:, :-1] - pressure[:, 1:], 0.0)
    south = np.where(south_faces, pressure[:-1, :] - pressure[1:, :], 0.0)
    return east, south


def _outflow_per_cell(east: np.ndarray, south: np.ndarray, shape: Tuple[int, int]) -> np.ndarray:
    out = np.zeros(shape)
    out[:, :-1] += np.maximum(east, 0.0)
    out[:, 1:] += np.maximum(-east, 0.0)
    out[:-1, :] += np.maximum(south, 0.0)
    out[1:, :] += np.maximum(-south, 0.0)
    return out


def _upwind_transport(values: np.ndarray, east: np.ndarray, south: np.ndarray, dt: float) -> np.ndarray:
    moved = np.zeros_like(values)

    carried = np.where(east > 0, east * values[:, :-1], east * values[:, 1:]) * dt
    moved[:, :-1] -= carried
    moved[:, 1:] += carried

    carried = np.where(south > 0, south * values[:-1, :], south * values[1:, :]) * dt
    moved[:-1, :] -= carried
    moved[1:, :] += carried
    return values + moved


def cfl_number(fmap: FluidMap, grid: MazeGrid, dt: float) -> float:
    """``dt`` times the larger of peak speed and peak per-cell outflow."""
    mask = grid.corridor_mask()
    east, south = _face_fluxes(fmap.pressure.values, mask)
    outflow = _outflow_per_cell(east, south, grid.shape)
    return dt * max(float(fmap.speed().max()), float(outflow.max()))


def advect_dye(
    grid: MazeGrid,
    fmap: FluidMap,
    init: DyeState,
    D: float = settings.DYE_DIFFUSION,
    dt: float = settings.DYE_DT,
    steps: int = 1,
    feed: bool = True,
    drain: bool = True,
) -> DyeState:
    """
    Advance dye by upwind advection followed by diffusion.

    Args:
        grid: Maze the flow was solved on
        fmap: Pressure and velocity
        init: Starting dye state
        D: Dye diffusivity, 0 disables diffusion
        dt: Time step
        steps: Number of steps to take
        feed: Hold the inlet at concentration 1 after each step
        drain: Empty the outlet after each step

    Returns:
        New DyeState; ``init`` is untouched

    Raises:
        CFLViolationError: the flow would move more than one cell of dye per step
        UnstableStepError: D*dt > 0.25, negative D or non-positive dt
        DimensionMismatchError: init or fmap do not match the grid
    """
    if dt <= 0 or D < 0:
        raise UnstableStepError(f"need D >= 0 and dt > 0, got D={D}, dt={dt}")
    check_stability(D * dt, "dye diffusion")
    init.concentration.check_matches(grid)
    fmap.pressure.check_matches(grid)

    courant = cfl_number(fmap, grid, dt)
    if courant > 1.0:
        raise CFLViolationError(f"CFL number {courant:.4g} exceeds 1 at dt={dt}")

    mask = grid.corridor_mask()
    east, south = _face_fluxes(fmap.pressure.values, mask)
    values = np.array(init.concentration.values, dtype=np.float64)
    sx, sy = grid.source
    dx, dy = grid.destination

    for _ in range(steps):
        values = _upwind_transport(values, east, south, dt)
        if D > 0:
            values = diffuse_values(values, mask, D * dt)
        if feed:
            values[sy, sx] = INLET_CONCENTRATION
        if drain:
            values[dy, dx] = 0.0

    return DyeState(ScalarField(values), time=init.time + steps)


def dye_breakthrough_time(
    grid: MazeGrid,
    fmap: FluidMap,
    cell: Coord,
    level: float = 0.5,
    D: float = settings.DYE_DIFFUSION,
    dt: float = settings.DYE_DT,
    max_steps: int = 100_000,
    init: Optional[DyeState] = None,
) -> int:
    """
    First step count at which the dye at ``cell`` reaches ``level``.

    Raises:
        FrontNeverArrivesError: level not reached within max_steps
    """
    state = init if init is not None else DyeState.empty(grid)
    while state.time < max_steps:
        state = advect_dye(grid, fmap, state, D=D, dt=dt, steps=1)
        if state.concentration.at(cell) >= level:
            logger.debug(f"Dye reached {level} at {cell} after {state.time} steps")
            return state.time
    raise FrontNeverArrivesError(f"dye did not reach {level} at {cell} in {max_steps} steps")
