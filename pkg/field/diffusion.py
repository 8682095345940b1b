"""
Explicit (forward-time, centred-space) diffusion on corridor cells.
"""

from typing import Sequence, Tuple

import numpy as np

from maze.models import Coord, MazeGrid
from utils.errors import ClampOnWallError, UnstableStepError

from .models import ScalarField

Clamp = Tuple[Coord, float]

STABILITY_LIMIT = 0.25


def masked_laplacian(values: np.ndarray, mask: np.ndarray) -> np.ndarray:
    """
    Sum of (neighbour - cell) over corridor neighbours, in flux form.

    Every face shared by two corridor cells moves the same amount out of one
    cell and into the other, so the total is conserved to round-off. Extra
    leading axes of ``values`` are treated as a batch of fields.

    Args:
        values: (..., height, width) array
        mask: (height, width) corridor mask

    Returns:
        Array shaped like ``values``; zero on walls
    """
    out = np.zeros_like(values)

    faces = mask[:, 1:] & mask[:, :-1]
    flux = np.where(faces, values[..., :, 1:] - values[..., :, :-1], 0.0)
    out[..., :, :-1] += flux
    out[..., :, 1:] -= flux

    faces = mask[1:, :] & mask[:-1, :]
    flux = np.where(faces, values[..., 1:, :] - values[..., :-1, :], 0.0)
    out[..., :-1, :] += flux
    out[..., 1:, :] -= flux
    return out


def dilate_front(front: np.ndarray) -> np.ndarray:
    """
    Grow a boolean front by one hop along N, E, S and W.

    Leading axes are a batch, as in ``masked_laplacian``. The caller masks
    the result to corridor cells.
    """
    grown = np.zeros_like(front)
    grown[..., 1:, :] |= front[..., :-1, :]
    grown[..., :-1, :] |= front[..., 1:, :]
    grown[..., :, 1:] |= front[..., :, :-1]
    grown[..., :, :-1] |= front[..., :, 1:]
    return grown


def check_stability(coefficient: float, what: str = "diffusion step") -> None:
    """
    Raises:
        UnstableStepError: D*dt above the explicit 2-D limit of 0.25
    """
    if coefficient > STABILITY_LIMIT:
        raise UnstableStepError(
            f"{what}: D*dt = {coefficient:.4g} exceeds {STABILITY_LIMIT}"
        )


def check_clamps(grid: MazeGrid, clamps: Sequence[Clamp]) -> None:
    """
    Raises:
        ClampOnWallError: a clamp is outside the grid or on a wall
    """
    for cell, _ in clamps:
        if not grid.is_corridor(cell):
            raise ClampOnWallError(f"clamp {cell} is not a corridor cell")


def apply_clamps(values: np.ndarray, clamps: Sequence[Clamp]) -> None:
    for (x, y), value in clamps:
        values[y, x] = value


def diffuse_values(values: np.ndarray, mask: np.ndarray, coefficient: float) -> np.ndarray:
    """One explicit step on a raw array: c + D*dt * masked Laplacian(c)."""
    return values + coefficient * masked_laplacian(values, mask)


def diffuse_step(
    field: ScalarField,
    grid: MazeGrid,
    D: float,
    dt: float,
    clamps: Sequence[Clamp] = (),
) -> ScalarField:
    """
    Advance a concentration field by one explicit diffusion step.

    Walls are zero-flux. Clamped cells are reset to their clamp value after
    the update.

    Args:
        field: Current concentration
        grid: Maze providing the corridor mask
        D: Diffusion coefficient (cell^2 per unit time)
        dt: Time step
        clamps: (cell, value) pairs held fixed

    Returns:
        New concentration field

    Raises:
        UnstableStepError: D*dt > 0.25
        ClampOnWallError: a clamp is not on a corridor cell
        DimensionMismatchError: field and grid shapes differ
    """
    if D <= 0 or dt <= 0:
        raise UnstableStepError(f"D and dt must be positive, got D={D}, dt={dt}")
    check_stability(D * dt)
    check_clamps(grid, clamps)
    field.check_matches(grid)

    mask = grid.corridor_mask()
    values = diffuse_values(field.values, mask, D * dt)
    apply_clamps(values, clamps)
    return ScalarField(values, sentinel=field.sentinel)
