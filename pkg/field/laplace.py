"""
Masked Laplace solver: SOR sweeps of the 5-point stencil over corridor cells.

Walls are insulating (zero flux): an unpinned corridor cell relaxes towards
the mean of its corridor neighbours only. Pinned cells are never written.
"""

import logging
from typing import Sequence, Tuple

import numba
import numpy as np

from maze.models import Coord, MazeGrid
from utils.errors import NoPinsError, NotConvergedError, PinOnWallError

from .models import ScalarField, SolveReport, SolverConfig

logger = logging.getLogger(__name__)

Pin = Tuple[Coord, float]


@numba.njit(cache=True)
def _sor_sweeps(values, mask, pinned, omega, tolerance, max_iters):
    height, width = values.shape
    iterations = 0
    residual = 0.0
    while iterations < max_iters:
        residual = 0.0
        for y in range(height):
            for x in range(width):
                if not mask[y, x] or pinned[y, x]:
                    continue
                total = 0.0
                count = 0
                if y > 0 and mask[y - 1, x]:
                    total += values[y - 1, x]
                    count += 1
                if x < width - 1 and mask[y, x + 1]:
                    total += values[y, x + 1]
                    count += 1
                if y < height - 1 and mask[y + 1, x]:
                    total += values[y + 1, x]
                    count += 1
                if x > 0 and mask[y, x - 1]:
                    total += values[y, x - 1]
                    count += 1
                if count == 0:
                    continue
                delta = omega * (total / count - values[y, x])
                values[y, x] += delta
                if abs(delta) > residual:
                    residual = abs(delta)
        iterations += 1
        if residual <= tolerance:
            break
    return iterations, residual


def solve_laplace(
    grid: MazeGrid,
    pins: Sequence[Pin],
    config: SolverConfig = SolverConfig(),
) -> Tuple[ScalarField, SolveReport]:
    """
    Solve the discrete Laplace equation on the corridor cells of a maze.

    Sweeps run in row-major order; the residual of a sweep is the largest
    absolute single-cell update.

    Args:
        grid: Maze whose corridors form the conducting domain
        pins: (cell, value) Dirichlet conditions
        config: SOR settings

    Returns:
        (field, report); when max_iters is exhausted the field is still
        returned with ``report.converged`` False

    Raises:
        PinOnWallError: a pin is outside the grid or on a wall
        NoPinsError: fewer than two pins or all pins share one value
    """
    if len(pins) < 2 or len({value for _, value in pins}) < 2:
        raise NoPinsError("need at least two pins with distinct values")
    for cell, _ in pins:
        if not grid.is_corridor(cell):
            raise PinOnWallError(f"pin {cell} is not a corridor cell")

    mask = grid.corridor_mask()
    pinned = np.zeros(grid.shape, dtype=bool)
    values = np.zeros(grid.shape, dtype=np.float64)
    values[mask] = float(np.mean([value for _, value in pins]))
    for (x, y), value in pins:
        values[y, x] = value
        pinned[y, x] = True

    iterations, residual = _sor_sweeps(
        values, mask, pinned, float(config.omega), float(config.tolerance), int(config.max_iters)
    )
    values[~mask] = 0.0
    report = SolveReport(
        iterations=int(iterations),
        final_residual=float(residual),
        converged=bool(residual <= config.tolerance),
    )

    if report.converged:
        logger.info(f"Laplace solve converged in {report.iterations} sweeps")
    else:
        logger.warning(
            f"Laplace solve stopped after {report.iterations} sweeps "
            f"(residual {report.final_residual:.3e} > {config.tolerance:.1e})"
        )
    return ScalarField(values), report


def require_converged(report: SolveReport, what: str = "Laplace solve") -> None:
    """
    Raises:
        NotConvergedError: the report is not converged
    """
    if not report.converged:
        raise NotConvergedError(
            f"{what} did not converge after {report.iterations} sweeps "
            f"(residual {report.final_residual:.3e})"
        )
