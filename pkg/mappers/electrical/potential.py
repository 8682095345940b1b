"""
Electrical mapper: corridors conduct, walls insulate.

The destination is held at potential 1 and the source at 0, so a tracer
standing at the source climbs towards the destination by always stepping to
the neighbour with the highest voltage.
"""

import logging
from dataclasses import dataclass

import numpy as np

from field.laplace import solve_laplace
from field.models import ScalarField, SolveReport, SolverConfig, TraceMode
from field.tracing import gradient, greedy_trace
from maze.models import MazeGrid, PathTrace
from utils.errors import DegenerateFieldError

logger = logging.getLogger(__name__)

SOURCE_POTENTIAL = 0.0
DESTINATION_POTENTIAL = 1.0


@dataclass(frozen=True)
class ElectricalMap:
    """Potential, current magnitude and the solve that produced them."""

    potential: ScalarField
    current: ScalarField
    report: SolveReport


def map_potential(grid: MazeGrid, config: SolverConfig = SolverConfig()) -> ElectricalMap:
    """
    Harmonic potential of the maze as a unit-resistor network.

    Args:
        grid: Maze to map
        config: SOR settings

    Returns:
        ElectricalMap; ``report.converged`` is False if the solve ran out of sweeps
    """
    potential, report = solve_laplace(
        grid,
        [(grid.source, SOURCE_POTENTIAL), (grid.destination, DESTINATION_POTENTIAL)],
        config,
    )
    current = ScalarField(gradient(potential, grid).magnitude())
    return ElectricalMap(potential=potential, current=current, report=report)


def trace_voltage_ascent(emap: ElectricalMap, grid: MazeGrid) -> PathTrace:
    """
    Walk from source to destination, always to the highest-voltage neighbour.

    Raises:
        PlateauError: the potential is flat at some step (solve too loose)
    """
    return greedy_trace(
        emap.potential, grid, grid.source, grid.destination, TraceMode.ASCEND
    )


def thermal_map(emap: ElectricalMap) -> ScalarField:
    """
    Current magnitude normalised to [0, 1]: the heat image of the maze.

    Raises:
        DegenerateFieldError: no current flows anywhere
    """
    peak = float(np.max(emap.current.values))
    if peak <= 0.0:
        raise DegenerateFieldError("no current flows between source and destination")
    return ScalarField(emap.current.values / peak)
