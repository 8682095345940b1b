"""
Breadth-first search oracle and corridor-graph helpers.
"""

from collections import deque
from typing import Dict, Optional

import numpy as np

from utils.errors import FromIsWallError, NoPathError

from .models import Coord, MazeGrid, PathTrace

UNREACHED = -1


def bfs_distances(grid: MazeGrid, start: Coord) -> np.ndarray:
    """
    Hop counts from a corridor cell to every cell of the grid.

    Args:
        grid: Maze to search
        start: Corridor cell the distances are measured from

    Returns:
        Integer (height, width) array; walls and unreachable cells hold UNREACHED

    Raises:
        FromIsWallError: start is not a corridor cell
    """
    if not grid.is_corridor(start):
        raise FromIsWallError(f"{start} is not a corridor cell")

    labels = np.full(grid.shape, UNREACHED, dtype=np.int64)
    labels[start[1], start[0]] = 0
    queue = deque([start])
    while queue:
        cell = queue.popleft()
        hops = labels[cell[1], cell[0]]
        for nxt in grid.neighbors(cell):
            if labels[nxt[1], nxt[0]] == UNREACHED:
                labels[nxt[1], nxt[0]] = hops + 1
                queue.append(nxt)
    return labels


def oracle_path(grid: MazeGrid) -> PathTrace:
    """
    A shortest source-to-destination path by BFS parent pointers.

    Neighbours are expanded in N, E, S, W order, which fixes the tie-breaking.

    Raises:
        NoPathError: the destination is unreachable from the source
    """
    parents: Dict[Coord, Optional[Coord]] = {grid.source: None}
    queue = deque([grid.source])
    while queue:
        cell = queue.popleft()
        if cell == grid.destination:
            break
        for nxt in grid.neighbors(cell):
            if nxt not in parents:
                parents[nxt] = cell
                queue.append(nxt)

    if grid.destination not in parents:
        raise NoPathError(f"destination {grid.destination} unreachable from {grid.source}")

    cells = []
    cursor: Optional[Coord] = grid.destination
    while cursor is not None:
        cells.append(cursor)
        cursor = parents[cursor]
    cells.reverse()
    return PathTrace(cells=tuple(cells))


def corridor_degree(grid: MazeGrid, cell: Coord) -> int:
    """Number of corridor 4-neighbours of a cell."""
    return len(grid.neighbors(cell))


def corridor_edge_count(grid: MazeGrid) -> int:
    """Number of adjacent corridor pairs (undirected edges)."""
    mask = grid.corridor_mask()
    horizontal = np.count_nonzero(mask[:, 1:] & mask[:, :-1])
    vertical = np.count_nonzero(mask[1:, :] & mask[:-1, :])
    return int(horizontal + vertical)


def is_connected(grid: MazeGrid) -> bool:
    """True when every corridor cell is reachable from the source."""
    labels = bfs_distances(grid, grid.source)
    return bool(np.all(labels[grid.corridor_mask()] != UNREACHED))
