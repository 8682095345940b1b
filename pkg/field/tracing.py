"""
Finite-difference gradients and the greedy neighbour tracer.
"""

from typing import List, Optional

import numpy as np

from maze.models import Coord, MazeGrid, PathTrace
from utils.errors import CycleError, FromIsWallError, PlateauError

from .models import ScalarField, TraceMode, VectorField


def _axis_derivative(values: np.ndarray, mask: np.ndarray, axis: int) -> np.ndarray:
    """Central difference where both sides are corridor, one-sided where one is, else 0."""
    padded_values = np.pad(values, 1, mode="constant")
    padded_mask = np.pad(mask, 1, mode="constant", constant_values=False)

    if axis == 1:
        before_v, after_v = padded_values[1:-1, :-2], padded_values[1:-1, 2:]
        before_m, after_m = padded_mask[1:-1, :-2], padded_mask[1:-1, 2:]
    else:
        before_v, after_v = padded_values[:-2, 1:-1], padded_values[2:, 1:-1]
        before_m, after_m = padded_mask[:-2, 1:-1], padded_mask[2:, 1:-1]

    derivative = np.zeros_like(values)
    both = before_m & after_m
    only_after = after_m & ~before_m
    only_before = before_m & ~after_m
    derivative[both] = (after_v[both] - before_v[both]) / 2.0
    derivative[only_after] = after_v[only_after] - values[only_after]
    derivative[only_before] = values[only_before] - before_v[only_before]
    derivative[~mask] = 0.0
    return derivative


def gradient(field: ScalarField, grid: MazeGrid) -> VectorField:
    """
    Gradient of a scalar field restricted to corridor cells.

    Raises:
        DimensionMismatchError: field and grid shapes differ
    """
    field.check_matches(grid)
    mask = grid.corridor_mask()
    return VectorField(
        vx=_axis_derivative(field.values, mask, axis=1),
        vy=_axis_derivative(field.values, mask, axis=0),
    )


def greedy_trace(
    field: ScalarField,
    grid: MazeGrid,
    start: Coord,
    goal: Coord,
    mode: TraceMode,
) -> PathTrace:
    """
    Follow the steepest strictly improving neighbour from start to goal.

    At every step the corridor neighbour with the largest (ASCEND) or smallest
    (DESCEND) value is taken; equal candidates resolve in N, E, S, W order.
    Cells holding the field's sentinel are never entered.

    Raises:
        FromIsWallError: start or goal is not a corridor cell
        PlateauError: no strictly improving neighbour before the goal
        CycleError: step bound (corridor cell count) exceeded
        DimensionMismatchError: field and grid shapes differ
    """
    field.check_matches(grid)
    for cell in (start, goal):
        if not grid.is_corridor(cell):
            raise FromIsWallError(f"{cell} is not a corridor cell")

    ascend = mode is TraceMode.ASCEND
    bound = int(grid.corridor_mask().sum())
    cells: List[Coord] = [start]
    current = start

    while current != goal:
        if len(cells) > bound:
            raise CycleError(f"trace exceeded {bound} steps without reaching {goal}")
        here = field.at(current)
        best: Optional[Coord] = None
        best_value = here
        for nxt in grid.neighbors(current):
            if field.is_sentinel(nxt):
                continue
            value = field.at(nxt)
            if (ascend and value > best_value) or (not ascend and value < best_value):
                best, best_value = nxt, value
        if best is None:
            raise PlateauError(
                f"no strictly {'greater' if ascend else 'smaller'} neighbour at {current} "
                f"(value {here:.6g}) after {len(cells) - 1} steps"
            )
        cells.append(best)
        current = best

    return PathTrace(cells=tuple(cells))
