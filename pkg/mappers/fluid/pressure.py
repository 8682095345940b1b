"""
Fluid mapper: thin-layer (Darcy) flow between the inlet and the outlet.

Inertia-free flow is potential flow, so pressure obeys the same masked
Laplace equation as the electrical mapper with the pins swapped: inlet
(source) at 1, outlet (destination) at 0.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List

import numpy as np

from field.laplace import solve_laplace
from field.models import ScalarField, SolveReport, SolverConfig, TraceMode, VectorField
from field.tracing import gradient, greedy_trace
from maze.models import Coord, MazeGrid, PathTrace
from utils.errors import EmptyBranchError

logger = logging.getLogger(__name__)

INLET_PRESSURE = 1.0
OUTLET_PRESSURE = 0.0


@dataclass(frozen=True)
class FluidMap:
    """Pressure, velocity ``v = -grad p`` and the solve report."""

    pressure: ScalarField
    velocity: VectorField
    report: SolveReport

    def speed(self) -> np.ndarray:
        return self.velocity.magnitude()


def map_pressure(grid: MazeGrid, config: SolverConfig = SolverConfig()) -> FluidMap:
    """
    Solve for the pressure field with inlet at 1 and outlet at 0.

    Args:
        grid: Maze to flood
        config: SOR settings

    Returns:
        FluidMap with velocity zero on walls
    """
    pressure, report = solve_laplace(
        grid,
        [(grid.source, INLET_PRESSURE), (grid.destination, OUTLET_PRESSURE)],
        config,
    )
    velocity = gradient(pressure, grid).negated()
    return FluidMap(pressure=pressure, velocity=velocity, report=report)


def branch_speeds(
    fmap: FluidMap, grid: MazeGrid, branches: Iterable[Iterable[Coord]]
) -> List[float]:
    """
    Mean flow speed over each branch.

    Wall and out-of-grid cells listed in a branch are ignored.

    Raises:
        EmptyBranchError: a branch has no corridor cells
    """
    fmap.pressure.check_matches(grid)
    speed = fmap.speed()
    means: List[float] = []
    for index, branch in enumerate(branches):
        cells = [cell for cell in branch if grid.is_corridor(cell)]
        if not cells:
            raise EmptyBranchError(f"branch {index} contains no corridor cells")
        means.append(float(np.mean([speed[y, x] for x, y in cells])))
    return means


def trace_streamline(fmap: FluidMap, grid: MazeGrid) -> PathTrace:
    """
    Steepest pressure descent from inlet to outlet.

    Dead ends hold the pressure of their junction, so the walk never enters
    them.

    Raises:
        PlateauError: the pressure is flat at some step
    """
    return greedy_trace(
        fmap.pressure, grid, grid.source, grid.destination, TraceMode.DESCEND
    )
