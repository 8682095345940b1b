"""
Seeded maze generation: recursive backtracker plus optional braiding.

Randomness comes from numpy's PCG64 bit generator, read as its raw 64-bit
stream; a choice among ``n`` options takes index ``raw % n``. Bit-generator
streams are stable across numpy releases, so a seed reproduces the same maze
on every platform.
"""

import logging
from typing import List, Set

import numpy as np

from utils.errors import BadDimsError

from .models import NEIGHBOR_OFFSETS, CellKind, Coord, GenConfig, MazeGrid

logger = logging.getLogger(__name__)


class _Rng:
    """Deterministic choices drawn from a PCG64 raw stream."""

    def __init__(self, seed: int):
        self._bits = np.random.PCG64(seed)

    def index(self, n: int) -> int:
        return int(self._bits.random_raw()) % n


def _check_dims(config: GenConfig) -> None:
    for name, value in (("width", config.width), ("height", config.height)):
        if value < 3 or value % 2 == 0:
            raise BadDimsError(f"{name} must be odd and >= 3, got {value}")
    if config.width == 3 and config.height == 3:
        raise BadDimsError("a 3x3 maze has a single room; source and destination would coincide")


def generate(config: GenConfig) -> MazeGrid:
    """
    Generate a maze deterministically from a seed.

    Odd-coordinate cells are rooms. An iterative recursive backtracker carves a
    spanning tree over the rooms, then a ``braid_fraction`` share of the dead
    ends (scan order) get one extra wall opened, turning the tree into a maze
    with loops.

    Args:
        config: Dimensions, seed and braid fraction

    Returns:
        MazeGrid with source at the top-left room and destination at the
        bottom-right room

    Raises:
        BadDimsError: even dimension, dimension below 3, or a single-room maze
    """
    _check_dims(config)
    width, height = config.width, config.height
    rng = _Rng(config.seed)

    open_cells: Set[Coord] = set()
    start = (1, 1)
    open_cells.add(start)
    visited = {start}
    stack: List[Coord] = [start]

    while stack:
        x, y = stack[-1]
        candidates = []
        for dx, dy in NEIGHBOR_OFFSETS:
            room = (x + 2 * dx, y + 2 * dy)
            if 0 < room[0] < width and 0 < room[1] < height and room not in visited:
                candidates.append((room, (x + dx, y + dy)))
        if not candidates:
            stack.pop()
            continue
        room, passage = candidates[rng.index(len(candidates))]
        open_cells.add(passage)
        open_cells.add(room)
        visited.add(room)
        stack.append(room)

    if config.braid_fraction > 0:
        _braid(open_cells, width, height, config.braid_fraction, rng)

    cells = tuple(
        CellKind.CORRIDOR if (x, y) in open_cells else CellKind.WALL
        for y in range(height)
        for x in range(width)
    )
    logger.debug(
        f"Generated {width}x{height} maze (seed={config.seed}, "
        f"braid={config.braid_fraction}, corridors={len(open_cells)})"
    )
    return MazeGrid(
        width=width,
        height=height,
        cells=cells,
        source=(1, 1),
        destination=(width - 2, height - 2),
    )


def _room_degree(room: Coord, open_cells: Set[Coord]) -> int:
    x, y = room
    return sum((x + dx, y + dy) in open_cells for dx, dy in NEIGHBOR_OFFSETS)


def _braid(
    open_cells: Set[Coord], width: int, height: int, fraction: float, rng: _Rng
) -> None:
    dead_ends = [
        (x, y)
        for y in range(1, height, 2)
        for x in range(1, width, 2)
        if _room_degree((x, y), open_cells) == 1
    ]
    quota = round(fraction * len(dead_ends))

    for room in dead_ends[:quota]:
        if _room_degree(room, open_cells) != 1:
            continue  # opened by an earlier step
        x, y = room
        closed = []
        for dx, dy in NEIGHBOR_OFFSETS:
            target = (x + 2 * dx, y + 2 * dy)
            passage = (x + dx, y + dy)
            if 0 < target[0] < width and 0 < target[1] < height and passage not in open_cells:
                closed.append(passage)
        if closed:
            open_cells.add(closed[rng.index(len(closed))])
